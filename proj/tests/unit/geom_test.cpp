#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "compat/error.hpp"
#include "compat/geom.hpp"
#include "oracles.hpp"

using namespace compat;
using geom::Orientation;
using geom::Point;

namespace {

Point P(long x, long y) { return {x, y}; }

}  // namespace

TEST(Geom, OrientationBasics) {
  EXPECT_EQ(geom::orientation(P(0, 0), P(1, 0), P(0, 1)), Orientation::CounterClockwise);
  EXPECT_EQ(geom::orientation(P(0, 0), P(1, 1), P(2, 2)), Orientation::Collinear);
  EXPECT_EQ(geom::orientation(P(0, 0), P(0, 1), P(1, 0)), Orientation::Clockwise);
}

TEST(Geom, OrientationIsExactBeyondDoubles) {
  // 2^70 offsets: a double determinant would round this to zero.
  const geom::Coord big = geom::Coord(1) << 70;
  const Point p{big, big};
  const Point q{big + 1, big};
  const Point r{big + 1, big + 1};
  EXPECT_EQ(geom::orientation(p, q, r), Orientation::CounterClockwise);
  const Point s{big * 2, big * 2};
  EXPECT_EQ(geom::orientation(P(0, 0), p, s), Orientation::Collinear);
}

TEST(Geom, SegmentsCross) {
  EXPECT_TRUE(geom::segments_cross(P(0, 0), P(2, 2), P(0, 2), P(2, 0)));
  EXPECT_FALSE(geom::segments_cross(P(0, 0), P(1, 0), P(0, 1), P(1, 1)));
  // Orientation signs by hand: abc = +2, abd = -2, cda = -2, cdb = +2.
  EXPECT_TRUE(geom::segments_cross(P(0, 0), P(3, 1), P(1, 1), P(2, 0)));
}

TEST(Geom, SegmentsCrossRejectsCollinear) {
  try {
    geom::segments_cross(P(0, 0), P(2, 0), P(1, 0), P(5, 7));
    FAIL() << "expected a general-position error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GeneralPosition);
  }
}

TEST(Geom, GeneralPosition) {
  const std::vector<Point> tri{P(0, 0), P(1, 0), P(0, 1)};
  EXPECT_TRUE(geom::is_general_position(tri));
  const std::vector<Point> line{P(0, 0), P(1, 1), P(2, 2)};
  EXPECT_FALSE(geom::is_general_position(line));
  const std::vector<Point> dup{P(0, 0), P(1, 0), P(0, 0)};
  EXPECT_FALSE(geom::is_general_position(dup));
  // All ten triples of this pentagon have nonzero determinant (checked by hand
  // and by the int64 oracle below).
  const std::vector<Point> penta{P(0, 0), P(4, 1), P(5, 5), P(1, 6), P(-2, 3)};
  EXPECT_TRUE(geom::is_general_position(penta));
}

TEST(Geom, ConvexCyclicOrder) {
  // Counter-clockwise input; the clockwise cycle from index 0 is 0,3,2,1.
  const std::vector<Point> quad{P(0, 0), P(10, 1), P(11, 10), P(1, 11)};
  const auto order = geom::convex_cyclic_order(quad);
  ASSERT_TRUE(order.has_value());
  EXPECT_EQ(*order, (std::vector<std::size_t>{0, 3, 2, 1}));

  const std::vector<Point> inner{P(0, 0), P(10, 0), P(0, 10), P(2, 3)};
  EXPECT_FALSE(geom::convex_cyclic_order(inner).has_value());

  const std::vector<Point> tri{P(0, 0), P(1, 0), P(0, 1)};
  const auto t = geom::convex_cyclic_order(tri);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(*t, (std::vector<std::size_t>{0, 2, 1}));
}

TEST(Geom, ParseCoord) {
  EXPECT_EQ(geom::parse_coord("-123456789012345678901234567890"),
            geom::Coord("-123456789012345678901234567890"));
  EXPECT_EQ(geom::parse_coord("+7"), geom::Coord(7));
  EXPECT_THROW(geom::parse_coord("1.5"), Error);
  EXPECT_THROW(geom::parse_coord(""), Error);
  EXPECT_THROW(geom::parse_coord("-"), Error);
  EXPECT_EQ(geom::to_string(geom::Coord(-42)), "-42");
}

TEST(GeomProperty, Antisymmetry) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (int i = 0; i < 2000; ++i) {
    const Point p = P(d(rng), d(rng)), q = P(d(rng), d(rng)), r = P(d(rng), d(rng));
    const auto a = geom::orientation(p, q, r);
    const auto b = geom::orientation(p, r, q);
    if (a == Orientation::Collinear) {
      EXPECT_EQ(b, Orientation::Collinear);
    } else {
      EXPECT_NE(a, b);
      EXPECT_NE(b, Orientation::Collinear);
    }
  }
}

TEST(GeomProperty, CrossingSymmetricAndMatchesInterleaving) {
  // 1000 random general-position quadruples. Symmetry always; in convex
  // position the crossing of ab/cd must equal chord interleaving on the hull.
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-500, 500);
  int convex_checked = 0;
  int done = 0;
  while (done < 1000) {
    std::vector<Point> q{P(d(rng), d(rng)), P(d(rng), d(rng)), P(d(rng), d(rng)),
                         P(d(rng), d(rng))};
    if (!geom::is_general_position(q)) continue;
    ++done;
    const bool x = geom::segments_cross(q[0], q[1], q[2], q[3]);
    EXPECT_EQ(x, geom::segments_cross(q[2], q[3], q[0], q[1]));
    EXPECT_EQ(x, geom::segments_cross(q[1], q[0], q[2], q[3]));
    EXPECT_EQ(x, geom::segments_cross(q[0], q[1], q[3], q[2]));
    const auto order = geom::convex_cyclic_order(q);
    if (!order) {
      EXPECT_FALSE(x) << "a triangle plus interior point has no crossing";
      continue;
    }
    ++convex_checked;
    std::array<std::size_t, 4> pos{};
    for (std::size_t i = 0; i < 4; ++i) pos[(*order)[i]] = i;
    EXPECT_EQ(x, oracle::chords_cross(pos[0], pos[1], pos[2], pos[3]));
  }
  EXPECT_GT(convex_checked, 300);
}

TEST(GeomProperty, ConvexHullClockwise) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-50, 50);
  for (int t = 0; t < 200; ++t) {
    std::vector<Point> pts;
    for (int i = 0; i < 12; ++i) pts.push_back(P(d(rng), d(rng)));
    if (!geom::is_general_position(pts)) continue;
    const auto hull = geom::convex_hull(pts);
    ASSERT_GE(hull.size(), 3u);
    // Every point lies right of (or on) each directed hull edge.
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const Point& a = pts[hull[i]];
      const Point& b = pts[hull[(i + 1) % hull.size()]];
      for (const Point& p : pts) {
        EXPECT_NE(geom::orientation(a, b, p), Orientation::CounterClockwise);
      }
    }
  }
}
