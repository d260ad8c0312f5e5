#pragma once

// Crossing semantics per set kind, the compatibility predicate, and the
// conflict graph whose independent sets are exactly the compatible matchings.

#include <cstddef>
#include <optional>
#include <vector>

#include "compat/bitset.hpp"
#include "compat/model.hpp"

namespace compat {

/// Whether vertex-disjoint edges e and f cross when drawn on `set`.
/// Convex sets use cyclic interleaving; Planar sets the exact segment test.
bool edges_cross_in_set(const Edge& e, const Edge& f, const LabeledSet& set);

/// Convex interleaving test on raw clockwise positions.
inline bool chords_interleave(std::size_t pa, std::size_t pb, std::size_t pc,
                              std::size_t pd, std::size_t n) noexcept {
  // c (resp. d) strictly inside the clockwise arc from a to b.
  const std::size_t span = (pb + n - pa) % n;
  const bool c_in = (pc + n - pa) % n < span;
  const bool d_in = (pd + n - pa) % n < span;
  return c_in != d_in;
}

struct CrossingWitness {
  Edge e;
  Edge f;
  std::size_t set_index = 0;
};

/// First crossing (in lexicographic edge-pair order, then set order) between
/// edges of m, if any.
std::optional<CrossingWitness> find_crossing(const Instance& inst,
                                             const Matching& m);

/// No two edges of m cross in any set. Throws Error{SizeMismatch} if m uses
/// a label outside 1..n.
bool is_compatible(const Instance& inst, const Matching& m);

/// Index of edge {a,b} in lexicographic order (1,2),(1,3),..,(n-1,n).
inline std::size_t edge_index(const Edge& e, std::size_t n) noexcept {
  const auto a = static_cast<std::size_t>(e.a - 1);
  const auto b = static_cast<std::size_t>(e.b - 1);
  return a * (2 * n - a - 1) / 2 + (b - a - 1);
}

/// Graph on the C(n,2) candidate edges; two candidates are adjacent iff they
/// share a label or cross in at least one set. Rows are bitsets.
class ConflictGraph {
 public:
  /// Graph with only shared-endpoint adjacency; add_set() adds crossings.
  explicit ConflictGraph(std::size_t n);

  void add_set(const LabeledSet& set);

  std::size_t labels() const noexcept { return n_; }
  std::size_t vertex_count() const noexcept { return edges_.size(); }
  const Edge& edge(std::size_t v) const noexcept { return edges_[v]; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Bitset& row(std::size_t v) const noexcept { return rows_[v]; }
  bool adjacent(std::size_t u, std::size_t v) const noexcept {
    return rows_[u].test(v);
  }

 private:
  void connect(std::size_t u, std::size_t v) noexcept {
    rows_[u].set(v);
    rows_[v].set(u);
  }

  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<Bitset> rows_;
};

ConflictGraph build_conflict_graph(const Instance& inst);

}  // namespace compat
