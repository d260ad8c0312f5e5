#include <gtest/gtest.h>

#include "compat/error.hpp"
#include "compat/generators.hpp"
#include "compat/model.hpp"

using namespace compat;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Syntax;
}

}  // namespace

TEST(Model, ParseTwoConvexSets) {
  const Instance inst = parse_instance(
      R"({"n":4,"sets":[{"type":"convex","order":[1,2,3,4]},{"type":"convex","order":[2,1,3,4]}]})");
  EXPECT_EQ(inst.n(), 4u);
  EXPECT_EQ(inst.ell(), 2u);
  // Rotated to start at label 1.
  EXPECT_EQ(inst.set(1).order(), (std::vector<Label>{1, 3, 4, 2}));
}

TEST(Model, ParseErrors) {
  EXPECT_EQ(kind_of([] {
              parse_instance(R"({"n":4,"sets":[{"type":"convex","order":[1,2,2,4]}]})");
            }),
            ErrorKind::NotPermutation);
  EXPECT_EQ(kind_of([] {
              parse_instance(
                  R"({"n":3,"sets":[{"type":"planar","points":[{"label":1,"x":"0","y":"0"},{"label":2,"x":"1","y":"1"},{"label":3,"x":"2","y":"2"}]}]})");
            }),
            ErrorKind::GeneralPosition);
  EXPECT_EQ(kind_of([] { parse_instance("{not json"); }), ErrorKind::Syntax);
  EXPECT_EQ(kind_of([] {
              parse_instance(R"({"n":5,"sets":[{"type":"convex","order":[1,2,3,4]}]})");
            }),
            ErrorKind::SizeMismatch);
  EXPECT_EQ(kind_of([] { parse_instance(R"({"n":4,"sets":[]})"); }), ErrorKind::SizeMismatch);
  EXPECT_EQ(kind_of([] {
              parse_instance(
                  R"({"n":3,"sets":[{"type":"planar","points":[{"label":1,"x":"0","y":"0"},{"label":2,"x":"1.5","y":"1"},{"label":3,"x":"2","y":"7"}]}]})");
            }),
            ErrorKind::Syntax);
}

TEST(Model, WriteIsCanonical) {
  const Instance inst = parse_instance(
      R"({"sets":[{"type":"convex","order":[3,1,2]},{"type":"planar","points":[{"label":2,"x":"5","y":"0"},{"label":1,"x":"0","y":"0"},{"label":3,"x":"0","y":"-9"}]}],"n":3})");
  EXPECT_EQ(write_instance(inst),
            R"({"n":3,"sets":[{"order":[1,2,3],"type":"convex"},{"points":[{"label":1,"x":"0","y":"0"},{"label":2,"x":"5","y":"0"},{"label":3,"x":"0","y":"-9"}],"type":"planar"}]})"
            "\n");
}

TEST(Model, RoundTripRandomInstances) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Instance a = random_convex_instance(9, 3, seed);
    EXPECT_EQ(parse_instance(write_instance(a)), a);
    const Instance b = random_planar_instance(9, 2, seed);
    EXPECT_EQ(parse_instance(write_instance(b)), b);
    EXPECT_EQ(write_instance(parse_instance(write_instance(b))), write_instance(b));
  }
}

TEST(Model, BigCoordinatesRoundTrip) {
  const std::string text =
      R"({"n":3,"sets":[{"points":[{"label":1,"x":"-99999999999999999999999","y":"0"},{"label":2,"x":"1","y":"123456789012345678901234567890"},{"label":3,"x":"2","y":"3"}],"type":"planar"}]})"
      "\n";
  EXPECT_EQ(write_instance(parse_instance(text)), text);
}

TEST(Model, MatchingValidation) {
  EXPECT_EQ(kind_of([] { Matching({Edge::make(1, 2), Edge::make(2, 3)}); }),
            ErrorKind::InvalidMatching);
  EXPECT_EQ(kind_of([] { Edge::make(3, 3); }), ErrorKind::InvalidMatching);
  const Matching m({Edge::make(4, 3), Edge::make(1, 2)});
  EXPECT_EQ(m.edges().front(), (Edge{1, 2}));
  EXPECT_EQ(write_matching(m), "{\"edges\":[[1,2],[3,4]]}\n");
  EXPECT_EQ(parse_matching(write_matching(m)), m);
  EXPECT_EQ(parse_matching(R"({"edges":[]})").size(), 0u);
  EXPECT_EQ(kind_of([] { parse_matching(R"({"edges":[[1,2],[2,5]]})"); }),
            ErrorKind::InvalidMatching);
}

TEST(Model, PlanarToConvex) {
  // Counter-clockwise quadrilateral labeled 1..4: clockwise is 1,4,3,2.
  const LabeledSet quad = LabeledSet::planar(
      {{1, {0, 0}}, {2, {10, 1}}, {3, {11, 10}}, {4, {1, 11}}});
  const auto c = planar_to_convex(quad);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->order(), (std::vector<Label>{1, 4, 3, 2}));

  const LabeledSet inner = LabeledSet::planar(
      {{1, {0, 0}}, {2, {10, 0}}, {3, {0, 10}}, {4, {2, 3}}});
  EXPECT_FALSE(planar_to_convex(inner).has_value());
  EXPECT_THROW(require_convex(inner), Error);

  const LabeledSet tri = LabeledSet::planar({{2, {0, 0}}, {1, {1, 0}}, {3, {0, 1}}});
  const auto t = planar_to_convex(tri);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->order(), (std::vector<Label>{1, 2, 3}));
}

TEST(Model, PolygonRealizationMatchesOrder) {
  const std::vector<Label> order{1, 5, 3, 7, 2, 6, 4};
  const auto c = planar_to_convex(convex_polygon_points(order));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->order(), order);
}
