#include "compat/solver.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "compat/error.hpp"

namespace compat {

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const ConflictGraph& graph, std::size_t stop_at)
      : graph_(graph), stop_at_(stop_at) {}

  void run() {
    Bitset all(graph_.vertex_count());
    all.set_all();
    seed_incumbent(all);
    if (best_.size() < stop_at_) expand(std::move(all));
  }

  const std::vector<std::size_t>& best() const noexcept { return best_; }
  std::uint64_t nodes() const noexcept { return nodes_; }
  bool stopped() const noexcept { return stopped_; }

 private:
  // Greedy independent set in index order; a cheap first incumbent.
  void seed_incumbent(const Bitset& all) {
    Bitset left = all;
    for (std::size_t v = left.find_first(); v != Bitset::npos;
         v = left.find_next_from(v + 1)) {
      best_.push_back(v);
      left.subtract(graph_.row(v));
    }
    if (best_.size() >= stop_at_) stopped_ = true;
  }

  void record() {
    if (current_.size() > best_.size()) {
      best_ = current_;
      if (best_.size() >= stop_at_) stopped_ = true;
    }
  }

  // True iff the residual graph can be covered by at most `budget` cliques,
  // i.e. the branch cannot beat the incumbent.
  bool covered_within(const Bitset& residual, std::size_t budget) {
    uncovered_ = residual;
    std::size_t cliques = 0;
    for (std::size_t u = uncovered_.find_first(); u != Bitset::npos;
         u = uncovered_.find_first()) {
      if (++cliques > budget) return false;
      uncovered_.reset(u);
      candidates_ = uncovered_;
      candidates_ &= graph_.row(u);
      for (std::size_t w = candidates_.find_first(); w != Bitset::npos;
           w = candidates_.find_next_from(w + 1)) {
        uncovered_.reset(w);
        candidates_ &= graph_.row(w);
      }
    }
    return true;
  }

  void expand(Bitset residual) {
    while (!stopped_) {
      ++nodes_;
      const std::size_t budget =
          best_.size() > current_.size() ? best_.size() - current_.size() : 0;
      if (residual.none()) {
        record();
        return;
      }
      if (covered_within(residual, budget)) return;

      std::size_t pick = Bitset::npos;
      std::size_t pick_degree = 0;
      for (std::size_t v = residual.find_first(); v != Bitset::npos;
           v = residual.find_next_from(v + 1)) {
        const std::size_t d = residual.count_and(graph_.row(v));
        if (pick == Bitset::npos || d > pick_degree) {
          pick = v;
          pick_degree = d;
        }
      }

      if (pick_degree == 0) {
        // Residual is independent: take all of it.
        const std::size_t before = current_.size();
        for (std::size_t v = residual.find_first(); v != Bitset::npos;
             v = residual.find_next_from(v + 1)) {
          current_.push_back(v);
        }
        record();
        current_.resize(before);
        return;
      }

      Bitset with = residual;
      with.subtract(graph_.row(pick));
      with.reset(pick);
      current_.push_back(pick);
      expand(std::move(with));
      current_.pop_back();

      residual.reset(pick);
    }
  }

  const ConflictGraph& graph_;
  std::size_t stop_at_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  Bitset uncovered_;
  Bitset candidates_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
};

}  // namespace

SolveResult max_independent_edges(const ConflictGraph& graph,
                                  const SolveOptions& options) {
  BranchAndBound bb(graph, options.stop_at);
  bb.run();
  std::vector<Edge> edges;
  edges.reserve(bb.best().size());
  for (std::size_t v : bb.best()) edges.push_back(graph.edge(v));
  SolveResult r;
  r.size = edges.size();
  r.matching = Matching(std::move(edges));
  r.optimal = !bb.stopped();
  r.nodes_explored = bb.nodes();
  return r;
}

SolveResult max_compatible_matching(const Instance& inst,
                                    const SolveOptions& options) {
  return max_independent_edges(build_conflict_graph(inst), options);
}

namespace {

class ExhaustiveSearch {
 public:
  explicit ExhaustiveSearch(const Instance& inst)
      : inst_(inst), used_(inst.n() + 1, false) {}

  void run() { visit(1); }

  std::vector<Edge> best;
  std::uint64_t nodes = 0;

 private:
  bool fits(const Edge& e) const {
    for (const Edge& f : current_) {
      for (const LabeledSet& s : inst_.sets()) {
        if (edges_cross_in_set(e, f, s)) return false;
      }
    }
    return true;
  }

  void visit(Label x) {
    ++nodes;
    const auto n = static_cast<Label>(inst_.n());
    while (x <= n && used_[static_cast<std::size_t>(x)]) ++x;
    if (x > n) {
      if (current_.size() > best.size()) best = current_;
      return;
    }
    used_[static_cast<std::size_t>(x)] = true;
    for (Label y = x + 1; y <= n; ++y) {
      if (used_[static_cast<std::size_t>(y)]) continue;
      const Edge e{x, y};
      if (!fits(e)) continue;
      used_[static_cast<std::size_t>(y)] = true;
      current_.push_back(e);
      visit(x + 1);
      current_.pop_back();
      used_[static_cast<std::size_t>(y)] = false;
    }
    // x stays unmatched.
    visit(x + 1);
    used_[static_cast<std::size_t>(x)] = false;
  }

  const Instance& inst_;
  std::vector<bool> used_;
  std::vector<Edge> current_;
};

}  // namespace

SolveResult brute_force_max_matching(const Instance& inst) {
  if (inst.n() > kBruteForceMaxN) {
    throw Error(ErrorKind::Guard, "brute force is limited to n <= " +
                                      std::to_string(kBruteForceMaxN));
  }
  ExhaustiveSearch search(inst);
  search.run();
  SolveResult r;
  r.size = search.best.size();
  r.matching = Matching(std::move(search.best));
  r.optimal = true;
  r.nodes_explored = search.nodes;
  return r;
}

SolveResult greedy_maximal_matching(const Instance& inst,
                                    std::span<const Edge> order) {
  const auto n = static_cast<Label>(inst.n());
  std::vector<Edge> lexicographic;
  if (order.empty()) {
    for (Label a = 1; a <= n; ++a) {
      for (Label b = a + 1; b <= n; ++b) lexicographic.push_back({a, b});
    }
    order = lexicographic;
  }
  std::vector<bool> used(inst.n() + 1, false);
  std::vector<Edge> chosen;
  std::uint64_t tests = 0;
  for (const Edge& e : order) {
    if (e.a < 1 || e.b > n || e.a >= e.b) {
      throw Error(ErrorKind::InvalidMatching, "greedy order has a bad edge");
    }
    if (used[static_cast<std::size_t>(e.a)] ||
        used[static_cast<std::size_t>(e.b)]) {
      continue;
    }
    bool ok = true;
    for (const Edge& f : chosen) {
      for (const LabeledSet& s : inst.sets()) {
        ++tests;
        if (edges_cross_in_set(e, f, s)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (!ok) continue;
    chosen.push_back(e);
    used[static_cast<std::size_t>(e.a)] = used[static_cast<std::size_t>(e.b)] =
        true;
  }
  SolveResult r;
  r.size = chosen.size();
  r.matching = Matching(std::move(chosen));
  r.optimal = false;
  r.nodes_explored = tests;
  return r;
}

}  // namespace compat
