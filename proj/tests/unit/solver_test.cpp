#include <gtest/gtest.h>

#include "compat/conflict.hpp"
#include "compat/error.hpp"
#include "compat/generators.hpp"
#include "compat/solver.hpp"
#include "oracles.hpp"

using namespace compat;

namespace {

Instance two_convex_six() {
  return Instance(6, {LabeledSet::convex({1, 2, 3, 4, 5, 6}),
                      LabeledSet::convex({1, 3, 5, 2, 6, 4})});
}

Instance identity(std::size_t n) {
  std::vector<Label> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Label>(i + 1);
  return Instance(n, {LabeledSet::convex(order)});
}

// Random instance with n <= 8, ell in {1,2,3}, each set convex or planar.
Instance mixed_instance(Rng& rng) {
  const std::size_t n = 2 + rng.below(7);
  const std::size_t ell = 1 + rng.below(3);
  std::vector<LabeledSet> sets;
  for (std::size_t i = 0; i < ell; ++i) {
    const std::uint64_t seed = rng.below(1ull << 40);
    if (rng.below(2) == 0) {
      sets.push_back(LabeledSet::convex(random_labeling(n, seed)));
    } else {
      sets.push_back(random_planar_instance(n, 1, seed).set(0));
    }
  }
  return Instance(n, sets);
}

}  // namespace

TEST(Solver, SpecExamples) {
  const auto r = max_compatible_matching(two_convex_six());
  EXPECT_EQ(r.size, 2u);
  EXPECT_TRUE(r.optimal);
  EXPECT_TRUE(is_compatible(two_convex_six(), r.matching));
  EXPECT_EQ(brute_force_max_matching(two_convex_six()).size, 2u);

  for (std::size_t m = 1; m <= 7; ++m) {
    EXPECT_EQ(max_compatible_matching(identity(2 * m)).size, m);
  }
  EXPECT_EQ(brute_force_max_matching(identity(4)).size, 2u);
  EXPECT_EQ(max_compatible_matching(five_block_permutation(10)).size, 4u);
}

TEST(Solver, TwoSetsOnFourPointsNeverForceOneEdge) {
  // The literal four-point reading of the "no perfect matching" example is
  // impossible; the oracle agrees with the solver that 2 is always reached.
  const Instance inst(4, {LabeledSet::convex({1, 2, 3, 4}), LabeledSet::convex({2, 1, 3, 4})});
  EXPECT_EQ(oracle::max_matching(inst), 2u);
  EXPECT_EQ(max_compatible_matching(inst).size, 2u);
}

TEST(Solver, BruteForceGuard) {
  try {
    brute_force_max_matching(identity(11));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Guard);
  }
}

TEST(Solver, DegenerateSizes) {
  const Instance one(1, {LabeledSet::convex({1})});
  EXPECT_EQ(max_compatible_matching(one).size, 0u);
  EXPECT_EQ(greedy_maximal_matching(one).size, 0u);
  EXPECT_EQ(brute_force_max_matching(one).size, 0u);
  const Instance two(2, {LabeledSet::convex({1, 2})});
  EXPECT_EQ(max_compatible_matching(two).size, 1u);
}

TEST(Solver, StopAtReturnsEarly) {
  SolveOptions opts;
  opts.stop_at = 2;
  const auto r = max_compatible_matching(identity(12), opts);
  EXPECT_GE(r.size, 2u);
  EXPECT_TRUE(is_compatible(identity(12), r.matching));
}

TEST(SolverProperty, OracleEquivalence) {
  Rng rng(2024);
  for (int t = 0; t < 500; ++t) {
    const Instance inst = mixed_instance(rng);
    const auto bb = max_compatible_matching(inst);
    const auto bf = brute_force_max_matching(inst);
    ASSERT_EQ(bb.size, bf.size) << write_instance(inst);
    EXPECT_EQ(bb.size, oracle::max_matching(inst)) << write_instance(inst);
    EXPECT_TRUE(is_compatible(inst, bb.matching));
    EXPECT_TRUE(is_compatible(inst, bf.matching));
    EXPECT_EQ(bb.matching.size(), bb.size);
  }
}

TEST(SolverProperty, TwoConvexOracleEquivalence) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const Instance inst = random_convex_instance(8, 2, seed);
    EXPECT_EQ(max_compatible_matching(inst).size, brute_force_max_matching(inst).size);
  }
}

TEST(SolverProperty, GreedyIsMaximal) {
  Rng rng(17);
  for (int t = 0; t < 300; ++t) {
    const Instance inst = mixed_instance(rng);
    const auto g = greedy_maximal_matching(inst);
    EXPECT_FALSE(g.optimal);
    ASSERT_TRUE(is_compatible(inst, g.matching));
    const ConflictGraph cg(inst.n());
    for (const Edge& e : cg.edges()) {
      bool free = true;
      for (const Edge& f : g.matching.edges()) free &= !e.shares_endpoint(f);
      if (!free) continue;
      auto edges = g.matching.edges();
      edges.push_back(e);
      EXPECT_FALSE(oracle::compatible(inst, edges)) << "greedy missed an augmenting edge";
    }
  }
}

TEST(SolverProperty, GreedyFollowsGivenOrder) {
  const Instance inst = identity(6);
  const std::vector<Edge> order{{1, 4}, {2, 3}, {5, 6}, {1, 2}};
  const auto g = greedy_maximal_matching(inst, order);
  EXPECT_EQ(g.matching, Matching({Edge{1, 4}, Edge{2, 3}, Edge{5, 6}}));
}

TEST(SolverProperty, AddingSetsNeverHelps) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Instance full = random_convex_instance(9, 5, seed);
    std::size_t prev = 5;
    for (std::size_t ell = 1; ell <= 5; ++ell) {
      std::vector<LabeledSet> prefix(full.sets().begin(), full.sets().begin() + ell);
      const std::size_t s = max_compatible_matching(Instance(9, prefix)).size;
      EXPECT_LE(s, prev);
      prev = s;
    }
  }
}
