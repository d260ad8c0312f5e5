#include "compat/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "compat/bounds.hpp"
#include "compat/conflict.hpp"
#include "compat/error.hpp"

namespace compat {

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t x = engine_();
    if (x >= threshold) return x % bound;
  }
}

Instance five_block_permutation(std::size_t n) {
  if (n == 0 || n % 10 != 0) {
    throw Error(ErrorKind::Precondition,
                "five-block permutation needs n to be a multiple of 10");
  }
  std::vector<Label> identity(n), pi;
  std::iota(identity.begin(), identity.end(), 1);
  pi.reserve(n);
  for (std::size_t i = 0; i < n / 5; ++i) {
    const auto base = static_cast<Label>(5 * i);
    for (Label offset : {2, 4, 1, 5, 3}) pi.push_back(base + offset);
  }
  return Instance(n, {LabeledSet::convex(std::move(identity)),
                      LabeledSet::convex(std::move(pi))});
}

const std::array<BlockLayout, 3>& three_block_layouts() {
  // A->B->C->D; A, reversed C, reversed D, B; A, D, reversed B, reversed C.
  // Every block pair occurs in both relative orientations, every block
  // triple with its common block in both orientations, and the three sets
  // realize the three 2+2 splits as crossings.
  static const std::array<BlockLayout, 3> layouts = {{
      {{{0, false}, {1, false}, {2, false}, {3, false}}},
      {{{0, false}, {2, true}, {3, true}, {1, false}}},
      {{{0, false}, {3, false}, {1, true}, {2, true}}},
  }};
  return layouts;
}

std::size_t label_bits(std::size_t n) {
  std::size_t b = 0;
  while ((std::size_t{1} << b) < n) ++b;
  return b;
}

Instance bit_partition_family(std::size_t n) {
  if (n < 4) {
    throw Error(ErrorKind::Precondition, "bit-partition family needs n >= 4");
  }
  const std::size_t b = label_bits(n);
  std::vector<LabeledSet> sets;
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = i + 1; j < b; ++j) {
      std::array<std::vector<Label>, 4> blocks;
      for (Label x = 1; x <= static_cast<Label>(n); ++x) {
        const auto v = static_cast<std::size_t>(x - 1);
        const std::size_t bi = (v >> i) & 1U, bj = (v >> j) & 1U;
        blocks[bi * 2 + bj].push_back(x);
      }
      for (const BlockLayout& layout : three_block_layouts()) {
        std::vector<Label> order;
        order.reserve(n);
        for (const BlockPlacement& place : layout) {
          const auto& blk = blocks[static_cast<std::size_t>(place.block)];
          if (place.reversed) {
            order.insert(order.end(), blk.rbegin(), blk.rend());
          } else {
            order.insert(order.end(), blk.begin(), blk.end());
          }
        }
        sets.push_back(LabeledSet::convex(std::move(order)));
      }
    }
  }
  return Instance(n, std::move(sets));
}

std::vector<Label> random_labeling(std::size_t n, std::uint64_t seed) {
  std::vector<Label> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  Rng rng(seed);
  rng.shuffle(perm);
  return perm;
}

LabeledSet random_planar_set(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  const auto grid = static_cast<std::uint64_t>(std::max<std::size_t>(64, 8 * n));
  std::vector<std::pair<std::int64_t, std::int64_t>> pts;
  pts.reserve(n);
  while (pts.size() < n) {
    const auto x = static_cast<std::int64_t>(rng.below(grid));
    const auto y = static_cast<std::int64_t>(rng.below(grid));
    bool ok = true;
    for (std::size_t i = 0; i < pts.size() && ok; ++i) {
      if (pts[i].first == x && pts[i].second == y) ok = false;
      for (std::size_t j = i + 1; j < pts.size() && ok; ++j) {
        const auto [ax, ay] = pts[i];
        const auto [bx, by] = pts[j];
        if ((bx - ax) * (y - ay) - (by - ay) * (x - ax) == 0) ok = false;
      }
    }
    if (ok) pts.emplace_back(x, y);
  }
  std::vector<LabeledPoint> labeled;
  labeled.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labeled.push_back({static_cast<Label>(i + 1), {pts[i].first, pts[i].second}});
  }
  return LabeledSet::planar(std::move(labeled));
}

LabeledSet convex_polygon_points(const std::vector<Label>& clockwise_order) {
  const std::size_t n = clockwise_order.size();
  if (n == 0) throw Error(ErrorKind::Precondition, "empty point set");
  double radius = std::max(1024.0, 64.0 * static_cast<double>(n * n));
  while (true) {
    std::vector<geom::Point> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      // Clockwise from the top.
      const double theta = std::numbers::pi / 2 -
                           2 * std::numbers::pi * static_cast<double>(i) /
                               static_cast<double>(n);
      pts.push_back({static_cast<long long>(std::llround(radius * std::cos(theta))),
                     static_cast<long long>(std::llround(radius * std::sin(theta)))});
    }
    bool valid = false;
    try {
      const auto order = geom::convex_cyclic_order(pts);
      if (order) {
        valid = true;
        for (std::size_t i = 0; i < n; ++i) valid = valid && (*order)[i] == i;
      }
    } catch (const Error&) {
      valid = false;
    }
    if (valid) {
      std::vector<LabeledPoint> labeled;
      labeled.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        labeled.push_back({clockwise_order[i], std::move(pts[i])});
      }
      return LabeledSet::planar(std::move(labeled));
    }
    radius *= 4;
  }
}

LabeledSet convex_polygon_points(std::size_t n) {
  std::vector<Label> identity(n);
  std::iota(identity.begin(), identity.end(), 1);
  return convex_polygon_points(identity);
}

Instance random_convex_instance(std::size_t n, std::size_t ell,
                                std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Label> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::vector<LabeledSet> sets{LabeledSet::convex(order)};
  for (std::size_t s = 1; s < ell; ++s) {
    rng.shuffle(order);
    sets.push_back(LabeledSet::convex(order));
  }
  return Instance(n, std::move(sets));
}

LabeledSet relabel(const LabeledSet& set, const std::vector<Label>& labeling) {
  if (labeling.size() != set.size()) {
    throw Error(ErrorKind::SizeMismatch, "labeling size differs from set size");
  }
  if (set.is_convex()) {
    std::vector<Label> order;
    order.reserve(set.size());
    for (Label x : set.order()) order.push_back(labeling[static_cast<std::size_t>(x - 1)]);
    return LabeledSet::convex(std::move(order));
  }
  std::vector<LabeledPoint> pts;
  pts.reserve(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    pts.push_back({labeling[i], set.points()[i]});
  }
  return LabeledSet::planar(std::move(pts));
}

Instance random_planar_instance(std::size_t n, std::size_t ell,
                                std::uint64_t seed) {
  Rng rng(seed);
  std::vector<LabeledSet> sets;
  for (std::size_t s = 0; s < ell; ++s) {
    const std::uint64_t geometry_seed = rng.below(~std::uint64_t{0});
    const std::uint64_t label_seed = rng.below(~std::uint64_t{0});
    sets.push_back(relabel(random_planar_set(n, geometry_seed),
                           random_labeling(n, label_seed)));
  }
  return Instance(n, std::move(sets));
}

namespace {

// cross[((p*n+q)*n+r)*n+s]: segment pq crosses segment rs, for distinct
// point indices (0-based, by current label).
class CrossingTable {
 public:
  explicit CrossingTable(const LabeledSet& set) : n_(set.size()) {
    if (n_ > 64) {
      throw Error(ErrorKind::Guard, "crossing table is limited to n <= 64");
    }
    cross_.assign(n_ * n_ * n_ * n_, 0);
    for (Label a = 1; a <= static_cast<Label>(n_); ++a) {
      for (Label b = a + 1; b <= static_cast<Label>(n_); ++b) {
        for (Label c = a + 1; c <= static_cast<Label>(n_); ++c) {
          for (Label d = c + 1; d <= static_cast<Label>(n_); ++d) {
            if (c == b || d == b) continue;
            if (!edges_cross_in_set({a, b}, {c, d}, set)) continue;
            ++crossings_;
            const std::array<std::size_t, 4> v{static_cast<std::size_t>(a - 1),
                                               static_cast<std::size_t>(b - 1),
                                               static_cast<std::size_t>(c - 1),
                                               static_cast<std::size_t>(d - 1)};
            for (auto [p, q] : {std::pair{v[0], v[1]}, std::pair{v[1], v[0]}}) {
              for (auto [r, s] : {std::pair{v[2], v[3]}, std::pair{v[3], v[2]}}) {
                at(p, q, r, s) = 1;
                at(r, s, p, q) = 1;
              }
            }
          }
        }
      }
    }
  }

  bool cross(std::size_t p, std::size_t q, std::size_t r, std::size_t s) const {
    return cross_[((p * n_ + q) * n_ + r) * n_ + s] != 0;
  }
  std::size_t crossings() const noexcept { return crossings_; }

 private:
  std::uint8_t& at(std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
    return cross_[((p * n_ + q) * n_ + r) * n_ + s];
  }

  std::size_t n_;
  std::size_t crossings_ = 0;
  std::vector<std::uint8_t> cross_;
};

struct LabeledPair {
  Label a, b, c, d;  // edges ab and cd
};

std::vector<LabeledPair> all_independent_pairs(std::size_t n) {
  std::vector<LabeledPair> out;
  const auto nn = static_cast<Label>(n);
  for (Label a = 1; a <= nn; ++a) {
    for (Label b = a + 1; b <= nn; ++b) {
      for (Label c = a + 1; c <= nn; ++c) {
        for (Label d = c + 1; d <= nn; ++d) {
          if (c == b || d == b) continue;
          out.push_back({a, b, c, d});
        }
      }
    }
  }
  return out;
}

}  // namespace

std::size_t convex_quadruple_count(const LabeledSet& points) {
  const CrossingTable table(points);
  // A convex quadrilateral has exactly one crossing pairing.
  return table.crossings();
}

ForceSearchResult force_search_random(const LabeledSet& points,
                                      std::size_t max_rounds,
                                      std::uint64_t seed) {
  const std::size_t n = points.size();
  if (n < 4) {
    throw Error(ErrorKind::InfiniteForce, "fewer than 4 points never cross");
  }
  const CrossingTable table(points);
  if (table.crossings() == 0) {
    throw Error(ErrorKind::InfiniteForce,
                "the complete graph on these points has no crossing");
  }

  Rng rng(seed);
  std::vector<LabeledPair> alive = all_independent_pairs(n);
  ForceSearchResult result;
  std::vector<std::size_t> where(n + 1);
  while (!alive.empty()) {
    if (result.labelings.size() == max_rounds) {
      throw Error(ErrorKind::MaxRounds,
                  "no forcing family within " + std::to_string(max_rounds) +
                      " labelings");
    }
    std::vector<Label> labeling(n);
    std::iota(labeling.begin(), labeling.end(), 1);
    rng.shuffle(labeling);
    // Point i (0-based, original label i+1) receives labeling[i].
    for (std::size_t i = 0; i < n; ++i) {
      where[static_cast<std::size_t>(labeling[i])] = i;
    }
    auto pt = [&](Label x) { return where[static_cast<std::size_t>(x)]; };
    std::erase_if(alive, [&](const LabeledPair& lp) {
      return table.cross(pt(lp.a), pt(lp.b), pt(lp.c), pt(lp.d));
    });
    result.labelings.push_back(relabel(points, labeling));
  }
  result.ell = result.labelings.size();

  const ForceCheck check = verify_force_family(result.labelings);
  if (!check.forces) {
    throw std::logic_error("force search produced an uncertified family");
  }
  return result;
}

std::vector<LabeledSet> single_crossing_force_family(const LabeledSet& points) {
  const std::size_t n = points.size();
  const CrossingTable table(points);
  if (table.crossings() != 1) {
    throw Error(ErrorKind::Precondition,
                "point set must have exactly one crossing pair of segments");
  }
  // Locate the crossing segments pq and rs (0-based point indices).
  std::array<std::size_t, 4> seg{};
  for (const LabeledPair& lp : all_independent_pairs(n)) {
    const std::array<std::size_t, 4> v{static_cast<std::size_t>(lp.a - 1),
                                       static_cast<std::size_t>(lp.b - 1),
                                       static_cast<std::size_t>(lp.c - 1),
                                       static_cast<std::size_t>(lp.d - 1)};
    if (table.cross(v[0], v[1], v[2], v[3])) {
      seg = v;
      break;
    }
  }

  std::vector<LabeledSet> family;
  for (const LabeledPair& lp : all_independent_pairs(n)) {
    std::vector<Label> labeling(n, 0);
    const std::array<Label, 4> labels{lp.a, lp.b, lp.c, lp.d};
    std::vector<bool> taken(n + 1, false);
    for (std::size_t t = 0; t < 4; ++t) {
      labeling[seg[t]] = labels[t];
      taken[static_cast<std::size_t>(labels[t])] = true;
    }
    Label next = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (labeling[i] != 0) continue;
      while (taken[static_cast<std::size_t>(next)]) ++next;
      labeling[i] = next++;
    }
    family.push_back(relabel(points, labeling));
  }
  return family;
}

}  // namespace compat
