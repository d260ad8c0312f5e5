#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>

#include "compat/conflict.hpp"
#include "compat/model.hpp"

namespace compat {

struct SolveResult {
  std::size_t size = 0;
  Matching matching;
  bool optimal = false;
  std::uint64_t nodes_explored = 0;
};

struct SolveOptions {
  /// Stop as soon as a matching of this size is found (result then has
  /// optimal = false unless it also meets the root bound).
  std::size_t stop_at = std::numeric_limits<std::size_t>::max();
};

/// Maximum independent set of the conflict graph by branch and bound:
/// branch on the residual vertex of largest residual degree (lowest index on
/// ties), prune with a greedy clique cover of the residual graph.
SolveResult max_independent_edges(const ConflictGraph& graph,
                                  const SolveOptions& options = {});

/// Largest compatible matching of the instance.
SolveResult max_compatible_matching(const Instance& inst,
                                    const SolveOptions& options = {});

/// Exhaustive recursion over all matchings using direct crossing tests.
/// Throws Error{Guard} for n > 10.
SolveResult brute_force_max_matching(const Instance& inst);

inline constexpr std::size_t kBruteForceMaxN = 10;

/// Scans candidate edges in `order` (lexicographic when empty) and keeps
/// each one that is disjoint from and crosses no current edge in any set.
/// The result is a maximal compatible matching.
SolveResult greedy_maximal_matching(const Instance& inst,
                                    std::span<const Edge> order = {});

}  // namespace compat
