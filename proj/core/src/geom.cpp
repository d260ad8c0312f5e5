#include "compat/geom.hpp"

#include <algorithm>
#include <numeric>

#include "compat/error.hpp"

namespace compat {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Syntax: return "syntax";
    case ErrorKind::NotPermutation: return "not_permutation";
    case ErrorKind::GeneralPosition: return "general_position";
    case ErrorKind::SizeMismatch: return "size_mismatch";
    case ErrorKind::InvalidMatching: return "invalid_matching";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Guard: return "guard";
    case ErrorKind::MaxRounds: return "max_rounds";
    case ErrorKind::InfiniteForce: return "infinite_force";
  }
  return "unknown";
}

}  // namespace compat

namespace compat::geom {

namespace {

int cross_sign(const Point& p, const Point& q, const Point& r) {
  const Coord det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return det.sign();
}

}  // namespace

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  const int s = cross_sign(p, q, r);
  if (s > 0) return Orientation::CounterClockwise;
  if (s < 0) return Orientation::Clockwise;
  return Orientation::Collinear;
}

bool segments_cross(const Point& a, const Point& b, const Point& c,
                    const Point& d) {
  const Orientation abc = orientation(a, b, c);
  const Orientation abd = orientation(a, b, d);
  const Orientation cda = orientation(c, d, a);
  const Orientation cdb = orientation(c, d, b);
  if (abc == Orientation::Collinear || abd == Orientation::Collinear ||
      cda == Orientation::Collinear || cdb == Orientation::Collinear) {
    throw Error(ErrorKind::GeneralPosition,
                "segments_cross: collinear endpoint triple");
  }
  return abc != abd && cda != cdb;
}

bool is_general_position(std::span<const Point> points) {
  const std::size_t m = points.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (points[i] == points[j]) return false;
      for (std::size_t k = j + 1; k < m; ++k) {
        if (cross_sign(points[i], points[j], points[k]) == 0) return false;
      }
    }
  }
  return true;
}

std::vector<std::size_t> convex_hull(std::span<const Point> points) {
  const std::size_t m = points.size();
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (points[a].x != points[b].x) return points[a].x < points[b].x;
    return points[a].y < points[b].y;
  });
  idx.erase(std::unique(idx.begin(), idx.end(),
                        [&](std::size_t a, std::size_t b) {
                          return points[a] == points[b];
                        }),
            idx.end());
  if (idx.size() <= 2) return idx;

  // Monotone chain keeping strict left turns only; the hull comes out
  // counter-clockwise and is reversed at the end.
  const std::size_t u = idx.size();
  std::vector<std::size_t> hull(2 * u);
  std::size_t h = 0;
  for (std::size_t i = 0; i < u; ++i) {
    while (h >= 2 &&
           cross_sign(points[hull[h - 2]], points[hull[h - 1]],
                      points[idx[i]]) <= 0) {
      --h;
    }
    hull[h++] = idx[i];
  }
  for (std::size_t i = u - 1, lower = h + 1; i-- > 0;) {
    while (h >= lower &&
           cross_sign(points[hull[h - 2]], points[hull[h - 1]],
                      points[idx[i]]) <= 0) {
      --h;
    }
    hull[h++] = idx[i];
  }
  hull.resize(h - 1);
  std::reverse(hull.begin(), hull.end());
  std::rotate(hull.begin(), hull.end() - 1, hull.end());
  return hull;
}

std::optional<std::vector<std::size_t>> convex_cyclic_order(
    std::span<const Point> points) {
  const std::size_t m = points.size();
  std::vector<std::size_t> hull = convex_hull(points);
  // A strictly convex polygon through every input point has no collinear
  // triple, so only the short-hull case needs the cubic degeneracy check.
  if (hull.size() != m || (m == 2 && points[0] == points[1])) {
    if (!is_general_position(points)) {
      throw Error(ErrorKind::GeneralPosition,
                  "convex_cyclic_order: points not in general position");
    }
    return std::nullopt;
  }
  const auto start = std::find(hull.begin(), hull.end(), std::size_t{0});
  std::rotate(hull.begin(), start, hull.end());
  return hull;
}

Coord parse_coord(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) {
    throw Error(ErrorKind::Syntax,
                "coordinate is not a decimal integer: '" + std::string(text) +
                    "'");
  }
  Coord value = 0;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch < '0' || ch > '9') {
      throw Error(ErrorKind::Syntax,
                  "coordinate is not a decimal integer: '" +
                      std::string(text) + "'");
    }
    value *= 10;
    value += ch - '0';
  }
  return negative ? Coord(-value) : value;
}

std::string to_string(const Coord& c) { return c.str(); }

}  // namespace compat::geom
