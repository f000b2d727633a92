#include <gtest/gtest.h>

#include <random>

#include "negtype/families.hpp"
#include "negtype/random.hpp"
#include "negtype/theta.hpp"
#include "negtype/verify/brute_force.hpp"

using namespace negtype;

namespace {

std::vector<Rational> path_lengths(const Theta& t) {
  return {t.paths[0].length, t.paths[1].length, t.paths[2].length};
}

}  // namespace

TEST(FindTheta, TreesAndCyclesAreThetaFree) {
  EXPECT_FALSE(find_theta(make_path(6)).has_value());
  for (std::size_t n = 2; n <= 8; ++n) EXPECT_FALSE(find_theta(make_cycle(n)).has_value());
  EXPECT_FALSE(find_theta(MetricGraph::build({"a"}, {})).has_value());
}

TEST(FindTheta, K4HasOne) {
  const auto g = make_complete(4);
  const auto t = find_theta(g);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(theta_defect(g, *t), "");
}

TEST(FindTheta, LoopsDoNotMakeThetas) {
  const auto g = MetricGraph::build({"a", "b"}, {{"e", "a", "b", Rational(1)},
                                                 {"f", "a", "b", Rational(1)},
                                                 {"l1", "a", "a", Rational(1)},
                                                 {"l2", "b", "b", Rational(1)}});
  EXPECT_FALSE(find_theta(g).has_value());
}

TEST(FindTheta, TwoCyclesSharingAVertexAreThetaFree) {
  const auto g = MetricGraph::build({"a", "b", "c", "d", "e"}, {{"1", "a", "b", Rational(1)},
                                                                {"2", "b", "c", Rational(1)},
                                                                {"3", "c", "a", Rational(1)},
                                                                {"4", "a", "d", Rational(1)},
                                                                {"5", "d", "e", Rational(1)},
                                                                {"6", "e", "a", Rational(1)}});
  EXPECT_FALSE(find_theta(g).has_value());
}

TEST(MinimalTheta, WholeThetaGraph) {
  const auto t = minimal_theta(make_theta(1, 2, 3));
  EXPECT_EQ(t.total, 6);
  EXPECT_EQ(path_lengths(t), (std::vector<Rational>{1, 2, 3}));
}

TEST(MinimalTheta, K4) {
  const auto g = make_complete(4);
  const auto t = minimal_theta(g);
  EXPECT_EQ(t.total, 5);
  EXPECT_EQ(path_lengths(t), (std::vector<Rational>{1, 2, 2}));
  EXPECT_EQ(theta_defect(g, t), "");
}

TEST(MinimalTheta, K23) {
  const auto g = make_complete_bipartite(2, 3);
  const auto t = minimal_theta(g);
  EXPECT_EQ(t.total, 6);
  EXPECT_EQ(path_lengths(t), (std::vector<Rational>{2, 2, 2}));
  EXPECT_EQ(g.degree(g.vertex_at(t.u)), 3u);
  EXPECT_EQ(g.degree(g.vertex_at(t.v)), 3u);
}

TEST(MinimalTheta, ThetaFreeThrows) { EXPECT_THROW(minimal_theta(make_cycle(5)), PreconditionError); }

TEST(MinimalTheta, MatchesBruteForce) {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const std::size_t n = 2 + detail::uniform_below(rng, 4);
    const auto g = make_random_connected(n, n - 1 + detail::uniform_below(rng, 5), 100 + seed, frac(1, 2),
                                         seed % 4 == 0);
    const auto expected = verify::brute_force_min_theta_total(g);
    const auto found = find_theta(g);
    EXPECT_EQ(found.has_value(), expected.has_value()) << "seed " << seed;
    if (!expected) continue;
    const auto t = minimal_theta(g);
    EXPECT_EQ(t.total, *expected) << "seed " << seed;
    EXPECT_EQ(theta_defect(g, t), "");
    EXPECT_EQ(theta_defect(g, *found), "");
  }
}

TEST(MinimalTheta, Deterministic) {
  const auto g = make_random_connected(6, 10, 42, Rational(1));
  const auto a = minimal_theta(g), b = minimal_theta(g);
  EXPECT_EQ(a.u, b.u);
  EXPECT_EQ(a.v, b.v);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(a.paths[i].edges, b.paths[i].edges);
}

TEST(ThetaDefect, CatchesTampering) {
  const auto g = make_complete(4);
  auto t = minimal_theta(g);
  t.total += 1;
  EXPECT_NE(theta_defect(g, t), "");
  t = minimal_theta(g);
  std::swap(t.paths[0], t.paths[2]);
  EXPECT_NE(theta_defect(g, t), "");
  t = minimal_theta(g);
  t.paths[1] = t.paths[0];
  EXPECT_NE(theta_defect(g, t), "");
}

TEST(ThetaDistance, MidpointsOfLongPaths) {
  const auto t = minimal_theta(make_theta(1, 2, 3));
  EXPECT_EQ(theta_distance(t, {1, Rational(1)}, {2, frac(3, 2)}), frac(5, 2));
  EXPECT_EQ(theta_distance(t, {0, Rational(0)}, {2, Rational(3)}), 1);
  EXPECT_EQ(theta_distance(t, {1, Rational(2)}, {0, Rational(1)}), 0);
  EXPECT_THROW(theta_distance(t, {0, Rational(2)}, {0, Rational(0)}), InputError);
}

TEST(ThetaDistance, AgreesWithGraphOnTheThetaGraph) {
  const auto g = make_theta(1, 2, 3);
  const auto t = minimal_theta(g);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (long i = 0; i <= 6; ++i)
        for (long j = 0; j <= 6; ++j) {
          const ThetaPoint x{a, t.paths[a].length * frac(i, 6)};
          const ThetaPoint y{b, t.paths[b].length * frac(j, 6)};
          EXPECT_EQ(theta_distance(t, x, y), verify::route_distance(g, to_point(g, t, x), to_point(g, t, y)));
        }
}

TEST(BranchLemma, UnitThetaExample) {
  const auto g = make_theta(1, 1, 1);
  const auto t = minimal_theta(g);
  const LemmaSample s{{0, frac(1, 4)}, {1, frac(1, 2)}};
  const auto r = check_branch_distance_lemma(g, t, {s});
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(theta_distance(t, s.x, s.y), frac(3, 4));
}

TEST(BranchLemma, BranchVertices) {
  const auto g = make_theta(1, 1, 1);
  const auto t = minimal_theta(g);
  const LemmaSample s{{0, Rational(0)}, {0, Rational(1)}};
  const auto r = check_branch_distance_lemma(g, t, {s});
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(theta_distance(t, s.x, s.y), t.paths[0].length);
}

TEST(BranchLemma, K4SeededSamples) {
  const auto g = make_complete(4);
  const auto t = minimal_theta(g);
  const auto r = check_branch_distance_lemma(g, t, sample_lemma_pairs(t, 20, 9));
  EXPECT_EQ(r.checked, 20u);
  EXPECT_TRUE(r.passed());
}

TEST(BranchLemma, RandomGraphs) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = make_random_connected(6, 10, seed, Rational(1));
    if (!find_theta(g)) continue;
    const auto t = minimal_theta(g);
    EXPECT_TRUE(check_branch_distance_lemma(g, t, sample_lemma_pairs(t, 20, seed)).passed()) << seed;
  }
}

TEST(BranchLemma, Preconditions) {
  const auto g = make_theta(frac(1, 2), 1, 1);
  const auto t = minimal_theta(g);
  EXPECT_THROW(check_branch_distance_lemma(g, t, {}), PreconditionError);
  const auto h = make_theta(1, 1, 1);
  const auto th = minimal_theta(h);
  EXPECT_THROW(check_branch_distance_lemma(h, th, {{{0, frac(3, 4)}, {1, Rational(0)}}}), PreconditionError);
}
