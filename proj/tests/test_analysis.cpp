#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "negtype/analysis.hpp"
#include "negtype/families.hpp"
#include "negtype/transform.hpp"
#include "negtype/verify/brute_force.hpp"
#include "negtype/witness.hpp"

using namespace negtype;

namespace {

FiniteMetric two_points(const Rational& d) {
  RationalMatrix m(2);
  m(0, 1) = m(1, 0) = d;
  return {{"p", "q"}, m};
}

FiniteMetric vertex_metric(const MetricGraph& g) {
  std::vector<Point> pts;
  for (const auto& v : g.vertices()) pts.push_back(Point::vertex(v));
  return distance_matrix(g, pts);
}

FiniteMetric witness_metric() {
  return omega_from_witness(construct_witness(make_theta(1, 1, 1))).metric;
}

FiniteMetric random_tree_metric(std::uint64_t seed, std::size_t n) {
  return vertex_metric(make_random_connected(n, n - 1, seed, Rational(1)));
}

}  // namespace

TEST(Gamma, Examples) {
  Weighting w;
  w.add(0, frac(1, 2));
  w.add(1, frac(-1, 2));
  EXPECT_EQ(gamma(two_points(Rational(1)), w), frac(-1, 4));

  const auto ww = omega_from_witness(construct_witness(make_theta(1, 1, 1)));
  EXPECT_EQ(gamma(ww.metric, ww.omega), frac(1, 432));
}

TEST(PsdEliminate, CertificateReconstructs) {
  RationalMatrix a(3);
  a(0, 0) = 2; a(0, 1) = a(1, 0) = 1; a(1, 1) = 2; a(2, 2) = 0;
  const auto r = psd_eliminate(a);
  ASSERT_TRUE(r.psd);
  EXPECT_TRUE(r.certificate.certifies(a));

  RationalMatrix b(2);
  b(0, 0) = 1; b(0, 1) = b(1, 0) = 2; b(1, 1) = 1;
  const auto s = psd_eliminate(b);
  ASSERT_FALSE(s.psd);
  EXPECT_LT(quadratic_form(b, s.witness), 0);
}

TEST(IsNegativeType, SmallSpaces) {
  EXPECT_TRUE(is_negative_type(FiniteMetric({"p"}, RationalMatrix(1))).negative_type);
  const auto two = is_negative_type(two_points(Rational(3)));
  EXPECT_TRUE(two.negative_type);
  EXPECT_TRUE(two.transcript.certifies(basepoint_gram(two_points(Rational(3)), two.basepoint)));
}

TEST(IsNegativeType, CycleIsNegativeType) {
  const auto m = vertex_metric(make_cycle(4));
  const auto v = is_negative_type(m);
  EXPECT_TRUE(v.negative_type);
  EXPECT_TRUE(v.transcript.certifies(basepoint_gram(m, v.basepoint)));
}

TEST(IsNegativeType, WitnessIsNot) {
  const auto m = witness_metric();
  for (std::size_t base = 0; base < m.size(); ++base) {
    const auto v = is_negative_type(m, base);
    EXPECT_FALSE(v.negative_type);
    EXPECT_GT(v.violation_gamma, 0);
    EXPECT_EQ(v.violation.sum(), 0);
    EXPECT_EQ(v.violation.abs_sum(), 1);
    EXPECT_EQ(gamma(m, v.violation), v.violation_gamma);
  }
}

TEST(IsNegativeType, TreesAndCycles) {
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    EXPECT_TRUE(is_negative_type(random_tree_metric(seed, 3 + seed % 6)).negative_type) << seed;
  for (std::size_t n = 3; n <= 9; ++n) EXPECT_TRUE(is_negative_type(vertex_metric(make_cycle(n))).negative_type);
}

TEST(GapBracket, TwoPoints) {
  const auto b = gap_bracket(two_points(Rational(1)));
  EXPECT_EQ(b.lower, frac(-1, 4));
  EXPECT_LE(b.lower, b.upper);
  EXPECT_LE(b.upper, frac(1, 4));
  EXPECT_EQ(gamma(two_points(Rational(1)), b.lower_weighting), b.lower);
}

TEST(GapBracket, Witness) {
  const auto m = witness_metric();
  const auto b = gap_bracket(m);
  EXPECT_GE(b.lower, frac(1, 432));
  EXPECT_LE(b.lower, b.upper);
  EXPECT_EQ(gamma(m, b.lower_weighting), b.lower);
  EXPECT_EQ(b.lower_weighting.sum(), 0);
  EXPECT_EQ(b.lower_weighting.abs_sum(), 1);
}

TEST(GapBracket, ContainsGridOptimum) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 3 + static_cast<std::size_t>(trial % 3);
    const auto g = make_random_connected(n, n + 1 + static_cast<std::size_t>(trial % 2), 100 + static_cast<std::uint64_t>(trial),
                                         Rational(1));
    const auto m = vertex_metric(g);
    const auto b = gap_bracket(m);
    const Rational grid = verify::grid_gap(m, 12);
    EXPECT_LE(grid, b.upper) << trial;
    EXPECT_GE(b.lower, grid) << trial;  // exact lower end for small n
  }
}

TEST(GapBracket, NegativeTypeUpperIsNegative) {
  const auto m = vertex_metric(make_cycle(5));
  const auto b = gap_bracket(m);
  EXPECT_LT(b.upper, 0);
  EXPECT_LE(b.lower, b.upper);
}

TEST(GapBracket, RejectsTinyInput) {
  EXPECT_THROW(gap_bracket(FiniteMetric({"p"}, RationalMatrix(1))), InputError);
}

TEST(SqrtEmbedding, Examples) {
  const auto c = sqrt_embedding(two_points(Rational(4)));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_NEAR(std::abs(c[0][0] - c[1][0]), 2.0, 1e-12);

  const auto k3 = vertex_metric(make_complete(3));
  const auto e = sqrt_embedding(k3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      double s = 0;
      for (std::size_t k = 0; k < e[i].size(); ++k) s += (e[i][k] - e[j][k]) * (e[i][k] - e[j][k]);
      EXPECT_NEAR(s, 1.0, 1e-12);
    }
  EXPECT_THROW(sqrt_embedding(witness_metric()), PreconditionError);
}

TEST(SqrtEmbedding, ReproducesTreeMetric) {
  const auto m = random_tree_metric(5, 7);
  const auto e = sqrt_embedding(m);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      double s = 0;
      for (std::size_t k = 0; k < e[i].size(); ++k) s += (e[i][k] - e[j][k]) * (e[i][k] - e[j][k]);
      EXPECT_NEAR(s, to_double(m(i, j)), 1e-9);
    }
}

TEST(PositiveEigenvalues, Examples) {
  EXPECT_EQ(positive_eigenvalue_count(two_points(Rational(1))), 1u);
  EXPECT_EQ(positive_eigenvalue_count(vertex_metric(make_complete(3))), 1u);
  EXPECT_EQ(positive_eigenvalue_count(vertex_metric(make_complete(4))), 1u);
}

TEST(CheckChain, K4Subdivision) {
  const auto m = vertex_metric(subdivide(make_complete(4), 2));
  const auto r = check_chain(m, L1Options{16});
  EXPECT_EQ(r.points, 16u);
  ASSERT_TRUE(r.l1_embeddable.has_value());
  EXPECT_TRUE(*r.l1_embeddable);
  EXPECT_TRUE(r.negative_type);
  EXPECT_EQ(r.positive_eigenvalues, 1u);
  EXPECT_TRUE(r.consistent());
}

TEST(CheckChain, Witness) {
  const auto r = check_chain(witness_metric());
  ASSERT_TRUE(r.l1_embeddable.has_value());
  EXPECT_FALSE(*r.l1_embeddable);
  EXPECT_FALSE(r.negative_type);
  EXPECT_TRUE(r.consistent());
}

TEST(CheckChain, SinglePointAndDuplicates) {
  const auto r = check_chain(FiniteMetric({"p"}, RationalMatrix(1)));
  EXPECT_EQ(r.points, 1u);
  EXPECT_TRUE(r.negative_type);
  EXPECT_FALSE(r.positive_eigenvalues.has_value());
  const auto d = check_chain(FiniteMetric({"p", "p"}, RationalMatrix(2)));
  EXPECT_EQ(d.points, 1u);
}

TEST(CheckChain, OverCapSkipsL1) {
  const auto m = vertex_metric(make_path(6));
  const auto r = check_chain(m, L1Options{4});
  EXPECT_FALSE(r.l1_embeddable.has_value());
  EXPECT_TRUE(r.negative_type);
}
