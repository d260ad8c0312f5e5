#include "compat/conflict.hpp"

#include <cstdint>

#include "compat/error.hpp"

namespace compat {

bool edges_cross_in_set(const Edge& e, const Edge& f, const LabeledSet& set) {
  if (set.is_convex()) {
    return chords_interleave(set.position(e.a), set.position(e.b),
                             set.position(f.a), set.position(f.b),
                             set.size());
  }
  return geom::segments_cross(set.point(e.a), set.point(e.b), set.point(f.a),
                              set.point(f.b));
}

std::optional<CrossingWitness> find_crossing(const Instance& inst,
                                             const Matching& m) {
  if (m.max_label() > static_cast<Label>(inst.n())) {
    throw Error(ErrorKind::SizeMismatch,
                "matching uses a label outside 1.." + std::to_string(inst.n()));
  }
  const auto& edges = m.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      for (std::size_t s = 0; s < inst.ell(); ++s) {
        if (edges_cross_in_set(edges[i], edges[j], inst.set(s))) {
          return CrossingWitness{edges[i], edges[j], s};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_compatible(const Instance& inst, const Matching& m) {
  return !find_crossing(inst, m).has_value();
}

ConflictGraph::ConflictGraph(std::size_t n) : n_(n) {
  edges_.reserve(n * (n - 1) / 2);
  for (Label a = 1; a <= static_cast<Label>(n); ++a) {
    for (Label b = a + 1; b <= static_cast<Label>(n); ++b) {
      edges_.push_back({a, b});
    }
  }
  rows_.assign(edges_.size(), Bitset(edges_.size()));
  // Shared endpoints: every edge at label x forms a clique.
  for (Label x = 1; x <= static_cast<Label>(n); ++x) {
    std::vector<std::size_t> star;
    for (Label y = 1; y <= static_cast<Label>(n); ++y) {
      if (y != x) star.push_back(edge_index(Edge::make(x, y), n));
    }
    for (std::size_t i = 0; i < star.size(); ++i) {
      for (std::size_t j = i + 1; j < star.size(); ++j) {
        connect(star[i], star[j]);
      }
    }
  }
}

namespace {

// Orientation signs for every ordered label triple of a Planar set, so the
// quartic pair loop does no big-integer work.
class OrientationTable {
 public:
  explicit OrientationTable(const LabeledSet& set) : n_(set.size()) {
    sign_.assign(n_ * n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        for (std::size_t k = j + 1; k < n_; ++k) {
          const auto o = geom::orientation(set.points()[i], set.points()[j],
                                           set.points()[k]);
          const std::int8_t s = o == geom::Orientation::CounterClockwise ? 1
                                : o == geom::Orientation::Clockwise      ? -1
                                                                          : 0;
          // Even permutations keep the sign, odd ones flip it.
          at(i, j, k) = at(j, k, i) = at(k, i, j) = s;
          at(j, i, k) = at(i, k, j) = at(k, j, i) = static_cast<std::int8_t>(-s);
        }
      }
    }
  }

  bool cross(const Edge& e, const Edge& f) const {
    const auto a = static_cast<std::size_t>(e.a - 1);
    const auto b = static_cast<std::size_t>(e.b - 1);
    const auto c = static_cast<std::size_t>(f.a - 1);
    const auto d = static_cast<std::size_t>(f.b - 1);
    const int abc = get(a, b, c), abd = get(a, b, d);
    const int cda = get(c, d, a), cdb = get(c, d, b);
    if (!abc || !abd || !cda || !cdb) {
      throw Error(ErrorKind::GeneralPosition, "collinear endpoint triple");
    }
    return abc != abd && cda != cdb;
  }

 private:
  std::int8_t& at(std::size_t i, std::size_t j, std::size_t k) {
    return sign_[(i * n_ + j) * n_ + k];
  }
  int get(std::size_t i, std::size_t j, std::size_t k) const {
    return sign_[(i * n_ + j) * n_ + k];
  }

  std::size_t n_;
  std::vector<std::int8_t> sign_;
};

}  // namespace

void ConflictGraph::add_set(const LabeledSet& set) {
  const std::size_t m = edges_.size();
  if (set.is_convex()) {
    for (std::size_t u = 0; u < m; ++u) {
      const Edge& e = edges_[u];
      const std::size_t pa = set.position(e.a), pb = set.position(e.b);
      for (std::size_t v = u + 1; v < m; ++v) {
        const Edge& f = edges_[v];
        if (e.shares_endpoint(f)) continue;
        if (chords_interleave(pa, pb, set.position(f.a), set.position(f.b),
                              n_)) {
          connect(u, v);
        }
      }
    }
    return;
  }
  const OrientationTable table(set);
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = u + 1; v < m; ++v) {
      if (edges_[u].shares_endpoint(edges_[v])) continue;
      if (table.cross(edges_[u], edges_[v])) connect(u, v);
    }
  }
}

ConflictGraph build_conflict_graph(const Instance& inst) {
  ConflictGraph g(inst.n());
  for (const LabeledSet& s : inst.sets()) g.add_set(s);
  return g;
}

}  // namespace compat
