#pragma once

// Exact planar predicates over arbitrary-precision integer coordinates.
// Nothing here rounds; degenerate configurations are reported, never perturbed.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace compat::geom {

using Coord = boost::multiprecision::cpp_int;

struct Point {
  Coord x;
  Coord y;

  friend bool operator==(const Point&, const Point&) = default;
};

enum class Orientation { Clockwise, CounterClockwise, Collinear };

/// Sign of the cross product (q - p) x (r - p).
Orientation orientation(const Point& p, const Point& q, const Point& r);

/// True iff the open segments ab and cd meet in a single interior point.
/// Throws Error{GeneralPosition} if any of the four orientation tests is
/// collinear; callers are expected to have validated general position.
bool segments_cross(const Point& a, const Point& b, const Point& c,
                    const Point& d);

/// All points distinct and no three collinear. O(m^3).
bool is_general_position(std::span<const Point> points);

/// Clockwise cyclic order of the point indices, starting at index 0, when
/// every point is a hull vertex; nullopt otherwise. Throws on collinear
/// triples.
std::optional<std::vector<std::size_t>> convex_cyclic_order(
    std::span<const Point> points);

/// Indices of the hull vertices in clockwise order, starting from the
/// lexicographically smallest point. Points strictly inside or on a hull
/// edge are omitted.
std::vector<std::size_t> convex_hull(std::span<const Point> points);

/// Parses an optionally signed decimal integer. Throws Error{Syntax}.
Coord parse_coord(std::string_view text);

std::string to_string(const Coord& c);

}  // namespace compat::geom
