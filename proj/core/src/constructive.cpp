#include "compat/constructive.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "compat/error.hpp"

namespace compat {

// ---------------------------------------------------------------- Shape

Shape Shape::from_chords(std::vector<Chord> chords) {
  const std::size_t m = 2 * chords.size();
  std::vector<int> partner(m, -1);
  for (auto [u, v] : chords) {
    if (u < 1 || v < 1 || static_cast<std::size_t>(u) > m ||
        static_cast<std::size_t>(v) > m || u == v) {
      throw Error(ErrorKind::Precondition,
                  "shape chords must pair up positions 1.." + std::to_string(m));
    }
    auto& pu = partner[static_cast<std::size_t>(u - 1)];
    auto& pv = partner[static_cast<std::size_t>(v - 1)];
    if (pu != -1 || pv != -1) {
      throw Error(ErrorKind::Precondition, "shape position used twice");
    }
    pu = v - 1;
    pv = u - 1;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto pi = static_cast<std::size_t>(partner[i]);
      const auto pj = static_cast<std::size_t>(partner[j]);
      if (i < pi && j < pj && i < j && j < pi && pi < pj) {
        throw Error(ErrorKind::Precondition, "shape chords cross");
      }
    }
  }

  std::vector<int> best = partner;
  std::vector<int> cand(m);
  const int mm = static_cast<int>(m);
  for (int s = 0; s < mm; ++s) {
    for (int reflect = 0; reflect < 2; ++reflect) {
      auto t = [&](int i) { return reflect ? ((s - i) % mm + mm) % mm : (i + s) % mm; };
      for (int i = 0; i < mm; ++i) cand[static_cast<std::size_t>(t(i))] = t(partner[static_cast<std::size_t>(i)]);
      if (cand < best) best = cand;
    }
  }
  return Shape(std::move(best));
}

Shape Shape::parse(std::string_view text) {
  std::vector<Chord> chords;
  auto read_int = [&](std::string_view s) {
    int v = 0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end) {
      throw Error(ErrorKind::Syntax, "bad shape chord '" + std::string(s) + "'");
    }
    return v;
  };
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view item = text.substr(start, comma - start);
    const std::size_t dash = item.find('-');
    if (dash == std::string_view::npos) {
      throw Error(ErrorKind::Syntax, "bad shape chord '" + std::string(item) + "'");
    }
    chords.emplace_back(read_int(item.substr(0, dash)),
                        read_int(item.substr(dash + 1)));
    start = comma + 1;
  }
  return from_chords(std::move(chords));
}

std::vector<Shape::Chord> Shape::chords() const {
  std::vector<Chord> out;
  for (std::size_t i = 0; i < partner_.size(); ++i) {
    const int j = partner_[i];
    if (static_cast<int>(i) < j) out.emplace_back(static_cast<int>(i) + 1, j + 1);
  }
  return out;
}

bool Shape::non_nested() const noexcept {
  const auto m = static_cast<int>(partner_.size());
  for (int i = 0; i < m; ++i) {
    const int j = partner_[static_cast<std::size_t>(i)];
    if (j != (i + 1) % m && j != (i + m - 1) % m) return false;
  }
  return true;
}

std::string Shape::to_string() const {
  std::string out;
  for (auto [u, v] : chords()) {
    if (!out.empty()) out += ',';
    out += std::to_string(u) + '-' + std::to_string(v);
  }
  return out;
}

Shape shape_of(const Matching& m, const LabeledSet& set) {
  const LabeledSet convex = require_convex(set);
  std::vector<std::pair<std::size_t, Label>> matched;
  for (const Edge& e : m.edges()) {
    matched.emplace_back(convex.position(e.a), e.a);
    matched.emplace_back(convex.position(e.b), e.b);
  }
  std::sort(matched.begin(), matched.end());
  auto rank = [&](Label x) {
    for (std::size_t i = 0; i < matched.size(); ++i) {
      if (matched[i].second == x) return static_cast<int>(i) + 1;
    }
    return 0;
  };
  std::vector<Shape::Chord> chords;
  for (const Edge& e : m.edges()) chords.emplace_back(rank(e.a), rank(e.b));
  return Shape::from_chords(std::move(chords));
}

// ------------------------------------------------ monotone subsequences

namespace {

// Indices of a longest strictly increasing subsequence of `values`.
std::vector<std::size_t> longest_increasing(const std::vector<std::size_t>& values) {
  std::vector<std::size_t> tails;  // index of smallest tail per length
  std::vector<std::size_t> prev(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto it = std::lower_bound(
        tails.begin(), tails.end(), values[i],
        [&](std::size_t idx, std::size_t v) { return values[idx] < v; });
    if (it != tails.begin()) prev[i] = *(it - 1);
    if (it == tails.end()) {
      tails.push_back(i);
    } else {
      *it = i;
    }
  }
  std::vector<std::size_t> out;
  if (tails.empty()) return out;
  for (std::size_t i = tails.back(); i != values.size(); i = prev[i]) {
    out.push_back(i);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<std::vector<Label>> circular_monotone_subsequence(
    const LabeledSet& reference, const LabeledSet& other,
    std::size_t target_len) {
  const LabeledSet ref = require_convex(reference);
  const LabeledSet oth = require_convex(other);
  const std::size_t n = ref.size();
  if (oth.size() != n) {
    throw Error(ErrorKind::SizeMismatch, "sets differ in size");
  }
  if (target_len == 0) return std::vector<Label>{};
  if (target_len > n) return std::nullopt;

  std::vector<std::size_t> seq(n);
  for (std::size_t i = 0; i < n; ++i) seq[i] = ref.position(oth.order()[i]);

  std::vector<std::size_t> values(n);
  for (std::size_t s = 0; s < n; ++s) {
    // The subsequence may be taken to start at rotation s; shifting the
    // reference positions puts that first element at the extreme value.
    for (int decreasing = 0; decreasing < 2; ++decreasing) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t shifted = (seq[(s + j) % n] + n - seq[s]) % n;
        values[j] = decreasing ? (n - shifted) % n : shifted;
      }
      const auto lis = longest_increasing(values);
      if (lis.size() >= target_len) {
        std::vector<Label> out;
        for (std::size_t t = 0; t < target_len; ++t) {
          out.push_back(oth.order()[(s + lis[t]) % n]);
        }
        return out;
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Label>> circular_monotone_subsequence(
    const LabeledSet& order, std::size_t target_len) {
  std::vector<Label> identity(order.size());
  for (std::size_t i = 0; i < identity.size(); ++i) {
    identity[i] = static_cast<Label>(i + 1);
  }
  return circular_monotone_subsequence(LabeledSet::convex(std::move(identity)),
                                       order, target_len);
}

namespace {

std::pair<LabeledSet, LabeledSet> two_convex_sets(const Instance& inst) {
  if (inst.ell() != 2) {
    throw Error(ErrorKind::Precondition, "expected exactly two point sets");
  }
  return {require_convex(inst.set(0)), require_convex(inst.set(1))};
}

}  // namespace

Matching same_shape_matching(const Instance& inst, const Shape& shape) {
  const auto [first, second] = two_convex_sets(inst);
  const std::size_t k = shape.k();
  auto labels = circular_monotone_subsequence(first, second, 2 * k);
  if (!labels) {
    throw Error(ErrorKind::Precondition,
                "no cyclically monotone subsequence of length " +
                    std::to_string(2 * k) + " (n >= (2k-2)^2+2 guarantees one)");
  }
  std::sort(labels->begin(), labels->end(), [&](Label x, Label y) {
    return first.position(x) < first.position(y);
  });
  std::vector<Edge> edges;
  for (auto [u, v] : shape.chords()) {
    edges.push_back(Edge::make((*labels)[static_cast<std::size_t>(u - 1)],
                               (*labels)[static_cast<std::size_t>(v - 1)]));
  }
  return Matching(std::move(edges));
}

Matching block_non_nested_matching(const Instance& inst, std::size_t k) {
  const auto [first, second] = two_convex_sets(inst);
  const std::size_t n = inst.n();
  if (n < k * k + k) {
    throw Error(ErrorKind::Precondition,
                "block construction needs n >= k^2 + k");
  }
  if (k == 0) return Matching{};

  constexpr std::size_t kNoBlock = static_cast<std::size_t>(-1);
  std::vector<std::size_t> block_of(n + 1, kNoBlock);
  for (std::size_t p = 0; p < k * (k + 1); ++p) {
    block_of[static_cast<std::size_t>(second.order()[p])] = p / (k + 1);
  }

  std::vector<bool> done(k, false);
  std::vector<Label> waiting(k, 0);  // processed point per block this phase
  std::vector<Edge> edges;
  for (Label x : first.order()) {
    const std::size_t b = block_of[static_cast<std::size_t>(x)];
    if (b == kNoBlock || done[b]) continue;
    if (waiting[b] == 0) {
      waiting[b] = x;
      continue;
    }
    edges.push_back(Edge::make(waiting[b], x));
    done[b] = true;
    // Other processed points are discarded; the rest of this block is
    // skipped through `done`.
    std::fill(waiting.begin(), waiting.end(), 0);
    if (edges.size() == k) break;
  }
  if (edges.size() != k) {
    throw std::logic_error("block construction drew fewer than k edges");
  }
  return Matching(std::move(edges));
}

std::size_t rball_radius(std::size_t m) {
  std::size_t r = 1;
  while (m > 2 * r * r + 2 * r) ++r;
  return r;
}

RballTrace rball_trace(const Instance& inst) {
  const auto [first, second] = two_convex_sets(inst);
  std::vector<Label> ring1 = first.order();
  std::vector<Label> ring2 = second.order();
  const std::size_t n = inst.n();
  RballTrace trace;
  std::vector<Edge> edges;

  std::vector<std::size_t> pos1(n + 1), pos2(n + 1);
  while (ring1.size() >= 2) {
    const std::size_t m = ring1.size();
    for (std::size_t i = 0; i < m; ++i) {
      pos1[static_cast<std::size_t>(ring1[i])] = i;
      pos2[static_cast<std::size_t>(ring2[i])] = i;
    }
    auto cyc = [m](std::size_t a, std::size_t b) {
      const std::size_t d = a > b ? a - b : b - a;
      return std::min(d, m - d);
    };

    // Alive labels in increasing order so ties go to the smallest pair.
    std::vector<Label> alive = ring1;
    std::sort(alive.begin(), alive.end());
    std::size_t best = static_cast<std::size_t>(-1);
    Label bx = 0, by = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const auto x = static_cast<std::size_t>(alive[i]);
      for (std::size_t j = i + 1; j < m; ++j) {
        const auto y = static_cast<std::size_t>(alive[j]);
        const std::size_t d = cyc(pos1[x], pos1[y]) + cyc(pos2[x], pos2[y]);
        if (d < best) {
          best = d;
          bx = alive[i];
          by = alive[j];
        }
      }
    }

    RballStep step;
    step.edge = Edge::make(bx, by);
    step.points_before = m;
    step.radius = rball_radius(m);
    step.distance = best;

    // Interior of the shorter arc between x and y (clockwise from x on ties).
    auto shorter_arc = [m](const std::vector<Label>& ring, std::size_t px,
                           std::size_t py) {
      const std::size_t cw = (py + m - px) % m;  // steps clockwise x -> y
      std::vector<Label> inner;
      if (cw <= m - cw) {
        for (std::size_t t = 1; t < cw; ++t) inner.push_back(ring[(px + t) % m]);
      } else {
        for (std::size_t t = 1; t < m - cw; ++t) inner.push_back(ring[(py + t) % m]);
      }
      return inner;
    };
    const auto bxs = static_cast<std::size_t>(bx);
    const auto bys = static_cast<std::size_t>(by);
    std::vector<Label> drop = shorter_arc(ring1, pos1[bxs], pos1[bys]);
    for (Label z : shorter_arc(ring2, pos2[bxs], pos2[bys])) drop.push_back(z);
    std::sort(drop.begin(), drop.end());
    drop.erase(std::unique(drop.begin(), drop.end()), drop.end());
    step.discarded = drop;

    std::vector<bool> gone(n + 1, false);
    gone[bxs] = gone[bys] = true;
    for (Label z : drop) gone[static_cast<std::size_t>(z)] = true;
    std::erase_if(ring1, [&](Label z) { return gone[static_cast<std::size_t>(z)]; });
    std::erase_if(ring2, [&](Label z) { return gone[static_cast<std::size_t>(z)]; });

    edges.push_back(step.edge);
    trace.steps.push_back(std::move(step));
  }
  trace.matching = Matching(std::move(edges));
  return trace;
}

Matching rball_matching(const Instance& inst) {
  return rball_trace(inst).matching;
}

}  // namespace compat
