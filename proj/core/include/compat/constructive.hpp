#pragma once

// Constructive lower bounds for two labeled convex sets: same-shape
// matchings on a circular monotone subsequence, one-edge-per-block
// non-nested matchings, and the r-ball recursion on the permutation matrix.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "compat/model.hpp"

namespace compat {

/// Non-crossing perfect matching on cyclic positions 1..2k, stored in its
/// canonical form: the lexicographically smallest partner array over all
/// 2k rotations and both reflections.
class Shape {
 public:
  using Chord = std::pair<int, int>;

  /// Chords on positions 1..2k. Throws Error{Precondition} unless they form a
  /// non-crossing perfect matching of 1..2k.
  static Shape from_chords(std::vector<Chord> chords);
  /// Parses "1-4,2-3".
  static Shape parse(std::string_view text);

  std::size_t k() const noexcept { return partner_.size() / 2; }
  /// Canonical chords, 1-based, each with first < second, sorted.
  std::vector<Chord> chords() const;
  /// All chords join cyclically adjacent positions (the shape is a cycle).
  bool non_nested() const noexcept;
  std::string to_string() const;

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  explicit Shape(std::vector<int> partner) : partner_(std::move(partner)) {}
  std::vector<int> partner_;
};

/// Shape of m restricted to the clockwise order of its matched points in a
/// convex set.
Shape shape_of(const Matching& m, const LabeledSet& set);

/// Labels forming a subsequence of length `target_len` whose cyclic order is
/// the same in `reference` and `other`, possibly reversed. Tries each
/// rotation of `other`'s order, increasing before decreasing, over each
/// cyclic shift of `reference` positions. Returned in `other`'s clockwise
/// order from the chosen rotation.
std::optional<std::vector<Label>> circular_monotone_subsequence(
    const LabeledSet& reference, const LabeledSet& other,
    std::size_t target_len);

/// Reference set taken as the identity order (1..n clockwise).
std::optional<std::vector<Label>> circular_monotone_subsequence(
    const LabeledSet& order, std::size_t target_len);

/// A compatible k-matching having `shape` in both convex sets of `inst`.
/// Throws Error{Precondition} if inst does not hold two convex sets or no
/// cyclically monotone subsequence of length 2k exists (guaranteed to exist
/// once n >= (2k-2)^2 + 2).
Matching same_shape_matching(const Instance& inst, const Shape& shape);

/// One edge per block of k+1 consecutive points on the second set's
/// perimeter, non-nested in both sets. Throws unless n >= k^2 + k.
Matching block_non_nested_matching(const Instance& inst, std::size_t k);

struct RballStep {
  Edge edge;
  std::size_t points_before = 0;  // points still in play
  std::size_t radius = 0;         // minimal r with points_before <= 2r^2+2r
  std::size_t distance = 0;       // cyclic L1 distance of the two 1-cells
  std::vector<Label> discarded;   // points on the shorter arcs
};

struct RballTrace {
  Matching matching;
  std::vector<RballStep> steps;
};

/// Repeatedly joins the two points whose permutation-matrix cells are
/// closest in cyclic L1 distance (at most 2r) and drops the points on the
/// shorter arcs in both sets.
RballTrace rball_trace(const Instance& inst);
Matching rball_matching(const Instance& inst);

/// Minimal r >= 1 with m <= 2r^2 + 2r.
std::size_t rball_radius(std::size_t m);

}  // namespace compat
