// Exhaustive ccm(n) search over second-set labelings.
//
// The first set is the identity. Two orders describe the same instance when
// they differ by a dihedral relabeling (rotation/reflection of the first
// cycle), a rotation/reflection of the second cycle, or by swapping the two
// sets (order <-> inverse). Reduced mode keeps only orbit minima.

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

#include "compat/bounds.hpp"
#include "compat/error.hpp"
#include "compat/solver.hpp"

namespace compat {

bool is_orbit_representative(std::span<const int> order) {
  const int n = static_cast<int>(order.size());
  if (n == 0) return true;
  if (order[0] != 0) return false;

  std::vector<int> inverse(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) inverse[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  std::vector<int> inverse_of_inverse(order.begin(), order.end());

  for (int swap = 0; swap < 2; ++swap) {
    const std::vector<int>& seq = swap ? inverse : inverse_of_inverse;
    const std::vector<int>& where = swap ? inverse_of_inverse : inverse;
    for (int reflect = 0; reflect < 2; ++reflect) {
      for (int t = 0; t < n; ++t) {
        // Relabeling x -> t - x (reflect) or x + t; find the position that
        // becomes label 0 and read the cycle from there both ways.
        const int source = reflect ? t : (n - t) % n;
        const int j0 = where[static_cast<std::size_t>(source)];
        for (int dir = -1; dir <= 1; dir += 2) {
          for (int i = 0; i < n; ++i) {
            const int x = seq[static_cast<std::size_t>(((j0 + dir * i) % n + n) % n)];
            const int c = reflect ? ((t - x) % n + n) % n : (x + t) % n;
            const int o = order[static_cast<std::size_t>(i)];
            if (c < o) return false;
            if (c > o) break;
          }
        }
      }
    }
  }
  return true;
}

namespace {

struct Best {
  std::size_t value = static_cast<std::size_t>(-1);
  std::vector<int> order;

  void offer(std::size_t v, const std::vector<int>& o) {
    if (v < value || (v == value && o < order)) {
      value = v;
      order = o;
    }
  }
};

}  // namespace

CcmRecord ccm_search(std::size_t n, CcmMode mode, unsigned jobs) {
  const std::size_t limit = mode == CcmMode::Full ? kCcmFullMaxN : kCcmReducedMaxN;
  if (n == 0 || n > limit) {
    throw Error(ErrorKind::Guard, "ccm search supports 1 <= n <= " +
                                      std::to_string(limit) + " in this mode");
  }
  jobs = std::max(1U, jobs);

  std::vector<Label> identity(n);
  std::iota(identity.begin(), identity.end(), 1);
  ConflictGraph base(n);
  base.add_set(LabeledSet::convex(identity));

  // Work items: fixed prefixes; each enumerates the remaining suffix in
  // lexicographic order.
  const std::size_t fixed = mode == CcmMode::Reduced ? 1 : 0;
  const std::size_t prefix_len = std::min(n, fixed + 2);
  std::vector<std::vector<int>> prefixes;
  {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::vector<int> prefix;
    auto extend = [&](auto&& self) -> void {
      if (prefix.size() == prefix_len) {
        prefixes.push_back(prefix);
        return;
      }
      for (int x : all) {
        if (std::find(prefix.begin(), prefix.end(), x) != prefix.end()) continue;
        if (prefix.size() < fixed && x != 0) continue;
        prefix.push_back(x);
        self(self);
        prefix.pop_back();
      }
    };
    extend(extend);
  }

  std::atomic<std::size_t> next_task{0};
  std::atomic<std::size_t> global_best{n / 2};
  std::atomic<std::uint64_t> examined{0};
  std::vector<Best> local(jobs);

  auto worker = [&](unsigned id) {
    Best& mine = local[id];
    std::vector<int> order(n);
    std::vector<Label> labels(n);
    while (true) {
      const std::size_t task = next_task.fetch_add(1);
      if (task >= prefixes.size()) return;
      const auto& prefix = prefixes[task];
      std::vector<int> suffix;
      for (int x = 0; x < static_cast<int>(n); ++x) {
        if (std::find(prefix.begin(), prefix.end(), x) == prefix.end()) {
          suffix.push_back(x);
        }
      }
      do {
        std::copy(prefix.begin(), prefix.end(), order.begin());
        std::copy(suffix.begin(), suffix.end(), order.begin() + static_cast<std::ptrdiff_t>(prefix.size()));
        if (mode == CcmMode::Reduced && !is_orbit_representative(order)) continue;
        examined.fetch_add(1, std::memory_order_relaxed);

        for (std::size_t i = 0; i < n; ++i) labels[i] = order[i] + 1;
        ConflictGraph graph = base;
        graph.add_set(LabeledSet::convex(labels));
        // Any order whose optimum exceeds the best seen so far can be cut
        // short; orders at or below it are always solved exactly.
        SolveOptions opts;
        opts.stop_at = global_best.load() + 1;
        const SolveResult r = max_independent_edges(graph, opts);
        if (!r.optimal) continue;
        mine.offer(r.size, order);
        std::size_t seen = global_best.load();
        while (r.size < seen && !global_best.compare_exchange_weak(seen, r.size)) {
        }
      } while (std::next_permutation(suffix.begin(), suffix.end()));
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
    for (auto& t : threads) t.join();
  }

  Best best;
  for (const Best& b : local) {
    if (!b.order.empty()) best.offer(b.value, b.order);
  }

  CcmRecord rec;
  rec.n = n;
  rec.mode = mode;
  rec.ccm = best.value;
  rec.labelings_examined = examined.load();
  for (int x : best.order) rec.witness.push_back(x + 1);
  return rec;
}

}  // namespace compat
