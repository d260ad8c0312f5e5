#include "compat/model.hpp"

#include <algorithm>
#include <utility>

#include <json.hpp>

#include "compat/error.hpp"

namespace compat {

using json = nlohmann::json;

Edge Edge::make(Label u, Label v) {
  if (u == v) {
    throw Error(ErrorKind::InvalidMatching,
                "edge endpoints must differ (label " + std::to_string(u) + ")");
  }
  return u < v ? Edge{u, v} : Edge{v, u};
}

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  std::vector<Label> labels;
  labels.reserve(2 * edges_.size());
  for (const Edge& e : edges_) {
    if (e.a >= e.b || e.a < 1) {
      throw Error(ErrorKind::InvalidMatching, "malformed edge");
    }
    labels.push_back(e.a);
    labels.push_back(e.b);
  }
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
    throw Error(ErrorKind::InvalidMatching,
                "matching edges must be vertex-disjoint");
  }
}

Label Matching::max_label() const noexcept {
  Label m = 0;
  for (const Edge& e : edges_) m = std::max(m, e.b);
  return m;
}

namespace {

// Returns label-1 -> index, throwing unless labels are exactly 1..n.
std::vector<std::size_t> invert_labels(const std::vector<Label>& labels) {
  const std::size_t n = labels.size();
  std::vector<std::size_t> where(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Label x = labels[i];
    if (x < 1 || static_cast<std::size_t>(x) > n) {
      throw Error(ErrorKind::NotPermutation,
                  "label " + std::to_string(x) + " outside 1.." +
                      std::to_string(n));
    }
    auto& slot = where[static_cast<std::size_t>(x - 1)];
    if (slot != n) {
      throw Error(ErrorKind::NotPermutation,
                  "label " + std::to_string(x) + " repeated");
    }
    slot = i;
  }
  return where;
}

}  // namespace

LabeledSet LabeledSet::convex(std::vector<Label> clockwise_order) {
  if (clockwise_order.empty()) {
    throw Error(ErrorKind::SizeMismatch, "empty point set");
  }
  auto where = invert_labels(clockwise_order);
  std::rotate(clockwise_order.begin(),
              clockwise_order.begin() + static_cast<std::ptrdiff_t>(where[0]),
              clockwise_order.end());
  LabeledSet s;
  s.kind_ = Kind::Convex;
  s.n_ = clockwise_order.size();
  s.position_ = invert_labels(clockwise_order);
  s.order_ = std::move(clockwise_order);
  return s;
}

LabeledSet LabeledSet::planar(std::vector<LabeledPoint> points) {
  if (points.empty()) {
    throw Error(ErrorKind::SizeMismatch, "empty point set");
  }
  std::vector<Label> labels;
  labels.reserve(points.size());
  for (const auto& p : points) labels.push_back(p.label);
  invert_labels(labels);
  std::sort(points.begin(), points.end(),
            [](const LabeledPoint& l, const LabeledPoint& r) {
              return l.label < r.label;
            });
  LabeledSet s;
  s.kind_ = Kind::Planar;
  s.n_ = points.size();
  s.points_.reserve(points.size());
  for (auto& p : points) s.points_.push_back(std::move(p.point));
  if (!geom::is_general_position(s.points_)) {
    throw Error(ErrorKind::GeneralPosition,
                "planar set is not in general position");
  }
  return s;
}

Instance::Instance(std::size_t n, std::vector<LabeledSet> sets)
    : n_(n), sets_(std::move(sets)) {
  if (n_ == 0) throw Error(ErrorKind::SizeMismatch, "n must be positive");
  if (sets_.empty()) {
    throw Error(ErrorKind::SizeMismatch, "an instance needs at least one set");
  }
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (sets_[i].size() != n_) {
      throw Error(ErrorKind::SizeMismatch,
                  "set " + std::to_string(i) + " has " +
                      std::to_string(sets_[i].size()) + " points, expected " +
                      std::to_string(n_));
    }
  }
}

namespace {

template <typename T>
T field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw Error(ErrorKind::Syntax, std::string("missing field '") + key + "'");
  }
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Syntax,
                std::string("field '") + key + "': " + e.what());
  }
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Syntax, e.what());
  }
}

LabeledSet parse_set(const json& js) {
  const auto type = field<std::string>(js, "type");
  if (type == "convex") {
    return LabeledSet::convex(field<std::vector<Label>>(js, "order"));
  }
  if (type == "planar") {
    const auto pts = field<json>(js, "points");
    if (!pts.is_array()) throw Error(ErrorKind::Syntax, "points must be a list");
    std::vector<LabeledPoint> points;
    points.reserve(pts.size());
    for (const auto& p : pts) {
      points.push_back({field<Label>(p, "label"),
                        {geom::parse_coord(field<std::string>(p, "x")),
                         geom::parse_coord(field<std::string>(p, "y"))}});
    }
    return LabeledSet::planar(std::move(points));
  }
  throw Error(ErrorKind::Syntax, "unknown set type '" + type + "'");
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const json js = parse_json(text);
  const auto n = field<long long>(js, "n");
  if (n <= 0) throw Error(ErrorKind::SizeMismatch, "n must be positive");
  const auto sets_js = field<json>(js, "sets");
  if (!sets_js.is_array()) throw Error(ErrorKind::Syntax, "sets must be a list");
  std::vector<LabeledSet> sets;
  sets.reserve(sets_js.size());
  for (const auto& s : sets_js) sets.push_back(parse_set(s));
  return Instance(static_cast<std::size_t>(n), std::move(sets));
}

std::string write_instance(const Instance& inst) {
  json sets = json::array();
  for (const LabeledSet& s : inst.sets()) {
    if (s.is_convex()) {
      sets.push_back({{"type", "convex"}, {"order", s.order()}});
    } else {
      json pts = json::array();
      for (std::size_t i = 0; i < s.size(); ++i) {
        pts.push_back({{"label", static_cast<Label>(i + 1)},
                       {"x", geom::to_string(s.points()[i].x)},
                       {"y", geom::to_string(s.points()[i].y)}});
      }
      sets.push_back({{"type", "planar"}, {"points", std::move(pts)}});
    }
  }
  const json js = {{"n", inst.n()}, {"sets", std::move(sets)}};
  return js.dump() + "\n";
}

Matching parse_matching(std::string_view text) {
  const json js = parse_json(text);
  const auto pairs = field<std::vector<std::vector<Label>>>(js, "edges");
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& p : pairs) {
    if (p.size() != 2) {
      throw Error(ErrorKind::Syntax, "each edge must be a pair of labels");
    }
    edges.push_back(Edge::make(p[0], p[1]));
  }
  return Matching(std::move(edges));
}

std::string write_matching(const Matching& m) {
  json edges = json::array();
  for (const Edge& e : m.edges()) edges.push_back({e.a, e.b});
  return json{{"edges", std::move(edges)}}.dump() + "\n";
}

std::optional<LabeledSet> planar_to_convex(const LabeledSet& set) {
  if (set.is_convex()) return set;
  const auto order = geom::convex_cyclic_order(set.points());
  if (!order) return std::nullopt;
  std::vector<Label> labels;
  labels.reserve(order->size());
  for (std::size_t idx : *order) labels.push_back(static_cast<Label>(idx + 1));
  return LabeledSet::convex(std::move(labels));
}

LabeledSet require_convex(const LabeledSet& set) {
  auto convex = planar_to_convex(set);
  if (!convex) {
    throw Error(ErrorKind::Precondition, "point set is not in convex position");
  }
  return std::move(*convex);
}

}  // namespace compat
