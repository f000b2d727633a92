#include <gtest/gtest.h>

#include "negtype/distance.hpp"
#include "negtype/families.hpp"
#include "negtype/io.hpp"
#include "negtype/theta.hpp"

using namespace negtype;

TEST(MakeTheta, UnitTheta) {
  const auto g = make_theta(1, 1, 1);
  EXPECT_EQ(g.vertices(), (std::vector<std::string>{"u", "v"}));
  EXPECT_EQ(g.edge_count(), 3u);
  for (const auto& e : g.edges()) EXPECT_EQ(e.length, 1);
}

TEST(MakeTheta, UnequalPaths) {
  const auto g = make_theta(1, 2, 3);
  EXPECT_EQ(distance(g, Point::vertex("u"), Point::vertex("v")), 1);
  EXPECT_EQ(minimal_theta(g).total, 6);
}

TEST(MakeTheta, ShortPathAllowed) {
  const auto g = make_theta(frac(1, 2), 1, 1);
  EXPECT_EQ(g.min_edge_length(), frac(1, 2));
}

TEST(MakeNamed, Examples) {
  FamilySpec k4;
  k4.family = Family::complete;
  k4.n = 4;
  const auto g = make_named(k4);
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 6u);

  FamilySpec k23;
  k23.family = Family::complete_bipartite;
  k23.a = 2;
  k23.b = 3;
  const auto h = make_named(k23);
  EXPECT_EQ(h.vertex_count(), 5u);
  EXPECT_EQ(h.edge_count(), 6u);
  EXPECT_TRUE(find_theta(h).has_value());

  FamilySpec c4;
  c4.family = Family::cycle;
  c4.n = 4;
  EXPECT_FALSE(find_theta(make_named(c4)).has_value());

  FamilySpec bad;
  bad.family = Family::theta;
  bad.lengths = {Rational(1)};
  EXPECT_THROW(make_named(bad), InputError);
}

TEST(MakeNamed, PathAndCycleShapes) {
  const auto p = make_path(5);
  EXPECT_EQ(p.edge_count(), 4u);
  const auto c = make_cycle(6);
  EXPECT_EQ(c.edge_count(), 6u);
  for (std::size_t v = 0; v < c.vertex_count(); ++v) EXPECT_EQ(c.degree(v), 2u);
}

TEST(RandomConnected, SingleVertex) {
  const auto g = make_random_connected(1, 0, 5, Rational(1));
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(RandomConnected, TreesAreThetaFree) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = make_random_connected(5, 4, seed, Rational(1));
    EXPECT_EQ(g.edge_count(), 4u);
    EXPECT_FALSE(find_theta(g).has_value());
  }
}

TEST(RandomConnected, CycleRankThreeContainsTheta) {
  const auto g = make_random_connected(4, 6, 7, Rational(1));
  EXPECT_EQ(g.edge_count(), 6u);
  EXPECT_TRUE(find_theta(g).has_value());
}

TEST(RandomConnected, LengthsRespectMinimum) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = make_random_connected(6, 9, seed, Rational(1));
    for (const auto& e : g.edges()) {
      EXPECT_GE(e.length, 1);
      EXPECT_LE(e.length, 2);
    }
  }
}

TEST(RandomConnected, Deterministic) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto a = make_random_connected(7, 11, seed, frac(1, 3), true);
    const auto b = make_random_connected(7, 11, seed, frac(1, 3), true);
    EXPECT_EQ(dump(graph_to_json(a)), dump(graph_to_json(b)));
  }
  EXPECT_NE(dump(graph_to_json(make_random_connected(7, 11, 1, Rational(1)))),
            dump(graph_to_json(make_random_connected(7, 11, 2, Rational(1)))));
}

TEST(RandomConnected, RejectsImpossibleShapes) {
  EXPECT_THROW(make_random_connected(0, 0, 1, Rational(1)), InputError);
  EXPECT_THROW(make_random_connected(5, 3, 1, Rational(1)), InputError);
  EXPECT_THROW(make_random_connected(3, 3, 1, Rational(0)), InputError);
}

TEST(RandomCactus, ThetaFree) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = make_random_cactus(6, seed, Rational(1));
    EXPECT_FALSE(find_theta(g).has_value()) << "seed " << seed;
  }
}
