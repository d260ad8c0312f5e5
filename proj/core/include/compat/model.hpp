#pragma once

// Labeled point sets, instances and matchings, plus their JSON encoding.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "compat/geom.hpp"

namespace compat {

/// A point label in 1..n.
using Label = int;

/// An unordered pair of distinct labels, stored with a < b.
struct Edge {
  Label a = 0;
  Label b = 0;

  /// Orders the endpoints; throws Error{InvalidMatching} on a loop.
  static Edge make(Label u, Label v);

  bool touches(Label x) const noexcept { return a == x || b == x; }
  bool shares_endpoint(const Edge& other) const noexcept {
    return touches(other.a) || touches(other.b);
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A set of pairwise vertex-disjoint edges, kept sorted lexicographically.
class Matching {
 public:
  Matching() = default;
  /// Throws Error{InvalidMatching} if two edges share an endpoint.
  explicit Matching(std::vector<Edge> edges);

  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  Label max_label() const noexcept;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<Edge> edges_;
};

struct LabeledPoint {
  Label label = 0;
  geom::Point point;
};

/// One labeled point set: either a convex set described only by its
/// clockwise cyclic label order, or a set of labeled integer points in
/// general position.
class LabeledSet {
 public:
  enum class Kind { Convex, Planar };

  /// Validates that the order is a permutation of 1..n and rotates it to
  /// start at label 1.
  static LabeledSet convex(std::vector<Label> clockwise_order);
  /// Validates the label bijection and general position; stores points
  /// sorted by label.
  static LabeledSet planar(std::vector<LabeledPoint> points);

  Kind kind() const noexcept { return kind_; }
  bool is_convex() const noexcept { return kind_ == Kind::Convex; }
  std::size_t size() const noexcept { return n_; }

  /// Clockwise label order (Convex only), starting at label 1.
  const std::vector<Label>& order() const noexcept { return order_; }
  /// Position of a label in the clockwise order (Convex only).
  std::size_t position(Label x) const noexcept {
    return position_[static_cast<std::size_t>(x - 1)];
  }
  /// Points indexed by label - 1 (Planar only).
  const std::vector<geom::Point>& points() const noexcept { return points_; }
  const geom::Point& point(Label x) const noexcept {
    return points_[static_cast<std::size_t>(x - 1)];
  }

  friend bool operator==(const LabeledSet&, const LabeledSet&) = default;

 private:
  LabeledSet() = default;

  Kind kind_ = Kind::Convex;
  std::size_t n_ = 0;
  std::vector<Label> order_;
  std::vector<std::size_t> position_;
  std::vector<geom::Point> points_;
};

/// l >= 1 labeled sets over the common label universe 1..n.
class Instance {
 public:
  /// Throws Error{SizeMismatch} if sets is empty or a set's size is not n.
  Instance(std::size_t n, std::vector<LabeledSet> sets);

  std::size_t n() const noexcept { return n_; }
  std::size_t ell() const noexcept { return sets_.size(); }
  const std::vector<LabeledSet>& sets() const noexcept { return sets_; }
  const LabeledSet& set(std::size_t i) const { return sets_.at(i); }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::size_t n_;
  std::vector<LabeledSet> sets_;
};

Instance parse_instance(std::string_view text);
std::string write_instance(const Instance& inst);

Matching parse_matching(std::string_view text);
std::string write_matching(const Matching& m);

/// The equivalent Convex set when every point of a Planar set is extreme.
std::optional<LabeledSet> planar_to_convex(const LabeledSet& set);

/// Convex sets pass through unchanged; Planar sets go through
/// planar_to_convex. Throws Error{Precondition} when not in convex position.
LabeledSet require_convex(const LabeledSet& set);

}  // namespace compat
