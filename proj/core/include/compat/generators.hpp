#pragma once

// Instance constructions and seeded randomized labeling machinery.

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "compat/model.hpp"

namespace compat {

/// Seeded source of randomness. Built on mt19937_64, whose output sequence
/// is fixed by the standard; bounded draws use rejection so results are
/// identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[static_cast<std::size_t>(below(i))]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Identity order plus the block permutation repeating
/// (5i+2, 5i+4, 5i+1, 5i+5, 5i+3). Throws unless n is a positive multiple
/// of 10.
Instance five_block_permutation(std::size_t n);

/// Clockwise block layouts of the three sets built from one 4-partition
/// A, B, C, D. Each entry is (block, reversed).
struct BlockPlacement {
  int block;  // 0 = A, 1 = B, 2 = C, 3 = D
  bool reversed;
};
using BlockLayout = std::array<BlockPlacement, 4>;
const std::array<BlockLayout, 3>& three_block_layouts();

/// Bits needed for labels 1..n written as label-1: ceil(log2 n).
std::size_t label_bits(std::size_t n);

/// 3*C(b,2) convex labelings, b = label_bits(n): for each bit pair (i, j)
/// the labels split by their two bits into A (00), B (01), C (10), D (11),
/// laid out per three_block_layouts() with increasing labels inside a block.
/// Throws for n < 4.
Instance bit_partition_family(std::size_t n);

/// Uniform permutation of 1..n.
std::vector<Label> random_labeling(std::size_t n, std::uint64_t seed);

/// n distinct grid points in general position with identity labels.
LabeledSet random_planar_set(std::size_t n, std::uint64_t seed);

/// n lattice points in strictly convex position; the point at clockwise
/// position i gets label clockwise_order[i] (identity when omitted).
LabeledSet convex_polygon_points(std::size_t n);
LabeledSet convex_polygon_points(const std::vector<Label>& clockwise_order);

/// Identity first set plus ell-1 uniformly random convex labelings.
Instance random_convex_instance(std::size_t n, std::size_t ell,
                                std::uint64_t seed);
/// ell independent random planar sets, each randomly labeled.
Instance random_planar_instance(std::size_t n, std::size_t ell,
                                std::uint64_t seed);

/// Relabels a point set: the point currently labeled x gets label
/// labeling[x-1].
LabeledSet relabel(const LabeledSet& set, const std::vector<Label>& labeling);

struct ForceSearchResult {
  std::size_t ell = 0;
  std::vector<LabeledSet> labelings;
};

/// Adds uniformly random labelings of `points` until every vertex-disjoint
/// labeled edge pair crosses in at least one of them, then certifies the
/// family exhaustively. Throws Error{InfiniteForce} if the point set has no
/// crossing quadruple and Error{MaxRounds} if more than max_rounds
/// labelings would be needed.
ForceSearchResult force_search_random(const LabeledSet& points,
                                      std::size_t max_rounds,
                                      std::uint64_t seed);

/// For a point set with exactly one crossing pair of segments: one labeling
/// per labeled independent edge pair, mapping it onto the crossing. Throws
/// Error{Precondition} if the set does not have exactly one crossing.
std::vector<LabeledSet> single_crossing_force_family(const LabeledSet& points);

/// Number of 4-subsets of the points in convex position.
std::size_t convex_quadruple_count(const LabeledSet& points);

}  // namespace compat
