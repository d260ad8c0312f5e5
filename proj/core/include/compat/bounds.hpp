#pragma once

// Closed-form bound evaluators, exact counting, the ccm(n) search and the
// single-edge forcing checkers.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "compat/conflict.hpp"
#include "compat/model.hpp"

namespace compat {

using BigCount = boost::multiprecision::cpp_int;

BigCount factorial(std::size_t n);
BigCount binomial(std::size_t n, std::size_t k);

/// Largest k meeting each lower-bound threshold (0 if none does).
struct LowerBounds {
  std::size_t same_shape = 0;  // n >= (2k-2)^2 + 2
  std::size_t maximal = 0;     // n >= k^2 + 2k - 1  (two sets)
  std::size_t non_nested = 0;  // n >= k^2 + k
  std::size_t rball = 0;       // n >= k^2/2 + k
  std::size_t multi_set = 0;   // n >= k^ell + 2k - 1
};

LowerBounds lb_formulas(std::size_t n, std::size_t ell);

/// Plane k-matchings of a convex n-set: C(n,2k) * Catalan(k).
BigCount count_plane_k_matchings_convex(std::size_t n, std::size_t k);

/// Labelings of the second set under which two fixed plane k-matchings form
/// one compatible k-matching: (n-2k)! * k! * 2^k.
BigCount labelings_realizing_pair(std::size_t n, std::size_t k);

struct ProbThreshold {
  std::size_t k_convex = 0;   // ceil(4 n^(2/3))
  std::size_t k_general = 0;  // ceil(125 n^(2/(ell+1)))
  bool vacuous = false;       // 2*k_convex > n: no k_convex-matching exists
  bool inequality_holds = false;  // f(k)^2 g(k) < n!, exact
  double log10_ratio = 0.0;   // log10(f(k)^2 g(k) / n!), reporting only
};

ProbThreshold prob_threshold(std::size_t n, std::size_t ell);

enum class CcmMode { Full, Reduced };

struct CcmRecord {
  std::size_t n = 0;
  std::size_t ccm = 0;
  std::vector<Label> witness;  // clockwise order of the second set
  std::uint64_t labelings_examined = 0;
  CcmMode mode = CcmMode::Reduced;
};

inline constexpr std::size_t kCcmFullMaxN = 10;
inline constexpr std::size_t kCcmReducedMaxN = 12;

/// min over second-set labelings (first set fixed to the identity) of the
/// largest compatible matching. Reduced mode visits one representative per
/// orbit of the dihedral relabelings and the swap of the two sets. The
/// witness is the lexicographically smallest minimizing order and does not
/// depend on `jobs`. Throws Error{Guard} above the mode's size limit.
CcmRecord ccm_search(std::size_t n, CcmMode mode, unsigned jobs = 1);

/// True iff `order` (0-based labels at 0-based positions, order[0] == 0) is
/// the smallest member of its orbit.
bool is_orbit_representative(std::span<const int> order);

struct ForceCheck {
  bool forces = false;
  std::optional<std::pair<Edge, Edge>> compatible_pair;  // first found
};

/// Whether every pair of vertex-disjoint labeled edges crosses in at least
/// one of the sets. The first compatible pair in lexicographic order is
/// returned otherwise.
ForceCheck verify_force_family(std::span<const LabeledSet> sets);

/// The compatible 2-matching guaranteed for k+1 sets of n >= 2^k + 3 points:
/// the smallest hull edge ab of the last set plus two further points on the
/// same side of line ab in each of the other sets. Throws
/// Error{Precondition} when n < 2^(ell-1) + 3.
Matching two_matching_exists(const Instance& inst);

struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 5;
};

struct ForceBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
};

/// lower = k+2 for the largest k with 2^k + 3 <= n; upper = smallest ell
/// with c^ell >= 3*C(n,4), c = 1/(1 - alpha/3). Requires n >= 5 and
/// alpha in (0, 1].
ForceBounds force_bounds(std::size_t n, Rational alpha = {1, 5});

/// Bounds on the limiting convex-quadruple proportion quoted for the
/// rectilinear crossing constant; usable as alpha.
inline constexpr Rational kRectilinearAlphaLower{37997256, 100000000};

}  // namespace compat
