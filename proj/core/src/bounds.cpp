#include "compat/bounds.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "compat/error.hpp"

namespace compat {

BigCount factorial(std::size_t n) {
  BigCount r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

BigCount binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigCount r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

namespace {

// Largest k >= 1 with fits(k), or 0. fits must be monotone decreasing.
template <typename Fits>
std::size_t largest_k(Fits fits) {
  std::size_t k = 0;
  while (fits(k + 1)) ++k;
  return k;
}

double log10_big(const BigCount& x) {
  if (x <= 0) return -std::numeric_limits<double>::infinity();
  const std::size_t top = boost::multiprecision::msb(x);
  if (top < 53) return std::log10(x.convert_to<double>());
  const BigCount mantissa = x >> (top - 52);
  return std::log10(mantissa.convert_to<double>()) +
         static_cast<double>(top - 52) * std::log10(2.0);
}

// Smallest k >= 0 with k^power >= target.
std::size_t ceil_root(const BigCount& target, unsigned power) {
  std::size_t lo = 0, hi = 1;
  while (boost::multiprecision::pow(BigCount(hi), power) < target) hi *= 2;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (boost::multiprecision::pow(BigCount(mid), power) >= target) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

}  // namespace

LowerBounds lb_formulas(std::size_t n, std::size_t ell) {
  const BigCount nn = n;
  LowerBounds lb;
  lb.same_shape = largest_k([&](std::size_t k) {
    const BigCount t = 2 * BigCount(k) - 2;
    return t * t + 2 <= nn;
  });
  lb.maximal = largest_k([&](std::size_t k) {
    return BigCount(k) * k + 2 * BigCount(k) - 1 <= nn;
  });
  lb.non_nested = largest_k(
      [&](std::size_t k) { return BigCount(k) * k + k <= nn; });
  lb.rball = largest_k(
      [&](std::size_t k) { return BigCount(k) * k + 2 * BigCount(k) <= 2 * nn; });
  lb.multi_set = largest_k([&](std::size_t k) {
    return boost::multiprecision::pow(BigCount(k), static_cast<unsigned>(ell)) +
               2 * BigCount(k) - 1 <=
           nn;
  });
  return lb;
}

BigCount count_plane_k_matchings_convex(std::size_t n, std::size_t k) {
  if (2 * k > n) return 0;
  return binomial(n, 2 * k) * binomial(2 * k, k) / (k + 1);
}

BigCount labelings_realizing_pair(std::size_t n, std::size_t k) {
  if (2 * k > n) return 0;
  return factorial(n - 2 * k) * factorial(k) * (BigCount(1) << k);
}

ProbThreshold prob_threshold(std::size_t n, std::size_t ell) {
  if (n == 0 || ell < 2) {
    throw Error(ErrorKind::Precondition, "prob_threshold needs n >= 1, ell >= 2");
  }
  ProbThreshold t;
  // k >= 4 n^(2/3)  <=>  k^3 >= 64 n^2
  t.k_convex = ceil_root(64 * BigCount(n) * n, 3);
  // k >= 125 n^(2/(ell+1))  <=>  k^(ell+1) >= 125^(ell+1) n^2
  const auto p = static_cast<unsigned>(ell + 1);
  t.k_general = ceil_root(boost::multiprecision::pow(BigCount(125), p) *
                              BigCount(n) * n,
                          p);

  const std::size_t k = t.k_convex;
  t.vacuous = 2 * k > n;
  const BigCount f = count_plane_k_matchings_convex(n, k);
  const BigCount lhs = f * f * labelings_realizing_pair(n, k);
  const BigCount rhs = factorial(n);
  t.inequality_holds = lhs < rhs;
  t.log10_ratio = log10_big(lhs) - log10_big(rhs);
  return t;
}

ForceCheck verify_force_family(std::span<const LabeledSet> sets) {
  ForceCheck out;
  if (sets.empty()) {
    throw Error(ErrorKind::SizeMismatch, "empty family");
  }
  const auto n = static_cast<Label>(sets.front().size());
  for (const LabeledSet& s : sets) {
    if (static_cast<Label>(s.size()) != n) {
      throw Error(ErrorKind::SizeMismatch, "family sets differ in size");
    }
  }
  for (Label a = 1; a <= n; ++a) {
    for (Label b = a + 1; b <= n; ++b) {
      for (Label c = a + 1; c <= n; ++c) {
        for (Label d = c + 1; d <= n; ++d) {
          if (c == b || d == b) continue;
          const Edge e{a, b}, f{c, d};
          bool crossed = false;
          for (const LabeledSet& s : sets) {
            if (edges_cross_in_set(e, f, s)) {
              crossed = true;
              break;
            }
          }
          if (!crossed) {
            out.compatible_pair = std::pair{e, f};
            return out;
          }
        }
      }
    }
  }
  out.forces = true;
  return out;
}

namespace {

// Cyclically consecutive label pairs on the hull of a set.
std::vector<Edge> hull_edges(const LabeledSet& s) {
  std::vector<Label> cycle;
  if (s.is_convex()) {
    cycle = s.order();
  } else {
    for (std::size_t idx : geom::convex_hull(s.points())) {
      cycle.push_back(static_cast<Label>(idx + 1));
    }
  }
  std::vector<Edge> out;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    out.push_back(Edge::make(cycle[i], cycle[(i + 1) % cycle.size()]));
  }
  return out;
}

// Which side of line ab the point labeled z lies on.
bool side_of(const LabeledSet& s, const Edge& ab, Label z) {
  if (s.is_convex()) {
    const std::size_t n = s.size();
    const std::size_t pa = s.position(ab.a);
    return (s.position(z) + n - pa) % n < (s.position(ab.b) + n - pa) % n;
  }
  return geom::orientation(s.point(ab.a), s.point(ab.b), s.point(z)) ==
         geom::Orientation::CounterClockwise;
}

}  // namespace

Matching two_matching_exists(const Instance& inst) {
  const std::size_t ell = inst.ell();
  const std::size_t k = ell - 1;
  if (k >= 63 || inst.n() < (std::size_t{1} << k) + 3) {
    throw Error(ErrorKind::Precondition,
                "two_matching_exists needs n >= 2^(ell-1) + 3");
  }
  const auto edges = hull_edges(inst.set(ell - 1));
  const Edge ab = *std::min_element(edges.begin(), edges.end());

  std::map<std::uint64_t, Label> first_with;
  for (Label z = 1; z <= static_cast<Label>(inst.n()); ++z) {
    if (ab.touches(z)) continue;
    std::uint64_t signature = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (side_of(inst.set(i), ab, z)) signature |= std::uint64_t{1} << i;
    }
    const auto [it, fresh] = first_with.emplace(signature, z);
    if (!fresh) {
      Matching m({ab, Edge::make(it->second, z)});
      if (!is_compatible(inst, m)) {
        throw std::logic_error("two_matching_exists: certificate failed");
      }
      return m;
    }
  }
  throw std::logic_error("two_matching_exists: pigeonhole failed");
}

ForceBounds force_bounds(std::size_t n, Rational alpha) {
  if (n < 5) throw Error(ErrorKind::Precondition, "force_bounds needs n >= 5");
  if (alpha.num <= 0 || alpha.den <= 0 || alpha.num > alpha.den) {
    throw Error(ErrorKind::Precondition, "alpha must lie in (0, 1]");
  }
  ForceBounds fb;
  std::size_t k = 1;
  while ((std::size_t{1} << (k + 1)) + 3 <= n) ++k;
  fb.lower = k + 2;

  // c = 3q / (3q - p); smallest ell with (3q)^ell >= r (3q - p)^ell.
  const BigCount r = 3 * binomial(n, 4);
  const BigCount top = 3 * BigCount(alpha.den);
  const BigCount bottom = top - alpha.num;
  BigCount lhs = 1, rhs = r;
  std::size_t ell = 0;
  while (lhs < rhs) {
    lhs *= top;
    rhs *= bottom;
    ++ell;
  }
  fb.upper = ell;
  return fb;
}

}  // namespace compat
