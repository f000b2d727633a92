#include <gtest/gtest.h>

#include <random>

#include "negtype/distance.hpp"
#include "negtype/families.hpp"
#include "negtype/random.hpp"
#include "negtype/transform.hpp"
#include "negtype/verify/brute_force.hpp"

using namespace negtype;

namespace {

MetricGraph unit_theta_by_hand() {
  return MetricGraph::build({"u", "v"}, {{"e1", "u", "v", Rational(1)},
                                         {"e2", "u", "v", Rational(1)},
                                         {"e3", "u", "v", Rational(1)}});
}

}  // namespace

TEST(Rational, ParsesCanonicalForms) {
  EXPECT_EQ(parse_rational("1/12"), frac(1, 12));
  EXPECT_EQ(parse_rational("2/4"), frac(1, 2));
  EXPECT_EQ(parse_rational("-3/6"), frac(-1, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
  EXPECT_EQ(to_string(Rational(3)), "3");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", " 1", "1 /2", "+1", "1.5", "a/b", "1/", "/2", "--1"})
    EXPECT_THROW(parse_rational(bad), InputError) << bad;
}

TEST(Rational, FracIsCanonical) {
  const Rational a = frac(2, 12);
  EXPECT_EQ(a.get_num(), 1);
  EXPECT_EQ(a.get_den(), 6);
  EXPECT_EQ(a + frac(1, 6), frac(1, 3));
}

TEST(BuildGraph, UnitThetaMultigraph) {
  const auto g = unit_theta_by_hand();
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.degree(g.vertex_at("u")), 3u);
  EXPECT_EQ(g, make_theta(1, 1, 1));
}

TEST(BuildGraph, SinglePointAccepted) {
  const auto g = MetricGraph::build({"a"}, {});
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(BuildGraph, RejectsDisconnected) {
  EXPECT_THROW(MetricGraph::build({"u", "v", "w"}, {{"e1", "u", "v", Rational(1)}}), InputError);
}

TEST(BuildGraph, RejectsBadInput) {
  EXPECT_THROW(MetricGraph::build({}, {}), InputError);
  EXPECT_THROW(MetricGraph::build({"u", "u"}, {}), InputError);
  EXPECT_THROW(MetricGraph::build({"u", "v"}, {{"e", "u", "v", Rational(0)}}), InputError);
  EXPECT_THROW(MetricGraph::build({"u", "v"}, {{"e", "u", "v", Rational(-1)}}), InputError);
  EXPECT_THROW(MetricGraph::build({"u", "v"}, {{"e", "u", "x", Rational(1)}}), InputError);
  EXPECT_THROW(MetricGraph::build({"u", "v"}, {{"e", "u", "v", Rational(1)}, {"e", "u", "v", Rational(1)}}),
               InputError);
}

TEST(BuildGraph, LoopsAndParallelEdges) {
  const auto g = MetricGraph::build({"u", "v"}, {{"a", "u", "v", Rational(1)},
                                                 {"b", "u", "v", Rational(2)},
                                                 {"loop", "u", "u", Rational(3)}});
  EXPECT_EQ(g.degree(g.vertex_at("u")), 2u);
  EXPECT_EQ(g.incident(g.vertex_at("u")).size(), 3u);
}

TEST(CanonicalPoint, Boundaries) {
  const auto g = make_theta(1, 1, 1);
  EXPECT_EQ(canonical_point(g, Point::on_edge("e1", Rational(0))), Point::vertex("u"));
  EXPECT_EQ(canonical_point(g, Point::on_edge("e1", Rational(1))), Point::vertex("v"));
  EXPECT_EQ(canonical_point(g, Point::on_edge("e1", frac(1, 12))), Point::on_edge("e1", frac(1, 12)));
  EXPECT_THROW(canonical_point(g, Point::on_edge("e1", Rational(2))), InputError);
  EXPECT_THROW(canonical_point(g, Point::on_edge("nope", frac(1, 2))), InputError);
  EXPECT_THROW(canonical_point(g, Point::vertex("w")), InputError);
}

TEST(InsertPoints, SplitsEdge) {
  const auto g = make_theta(1, 1, 1);
  const std::vector<Point> pts{Point::on_edge("e1", frac(1, 3))};
  const auto [h, map] = insert_points(g, pts);
  EXPECT_EQ(h.vertex_count(), 3u);
  EXPECT_EQ(h.edge_count(), 4u);
  const auto v = h.vertex_at(map.at(pts[0]));
  EXPECT_EQ(h.degree(v), 2u);
  std::vector<Rational> lengths;
  for (auto e : h.incident(v)) lengths.push_back(h.edge(e).length);
  std::sort(lengths.begin(), lengths.end());
  EXPECT_EQ(lengths, (std::vector<Rational>{frac(1, 3), frac(2, 3)}));
}

TEST(InsertPoints, VertexIsIdentity) {
  const auto g = make_theta(1, 1, 1);
  const std::vector<Point> pts{Point::vertex("u")};
  const auto [h, map] = insert_points(g, pts);
  EXPECT_EQ(h, g);
  EXPECT_EQ(map.at(pts[0]), "u");
}

TEST(InsertPoints, OrderedSplitting) {
  const auto g = make_path(2);
  const auto& e = g.edge(0).id;
  const std::vector<Point> pts{Point::on_edge(e, frac(3, 4)), Point::on_edge(e, frac(1, 4))};
  const auto [h, map] = insert_points(g, pts);
  ASSERT_EQ(h.edge_count(), 3u);
  EXPECT_EQ(h.edge(0).length, frac(1, 4));
  EXPECT_EQ(h.edge(1).length, frac(1, 2));
  EXPECT_EQ(h.edge(2).length, frac(1, 4));
}

TEST(Distance, ThetaAcrossPaths) {
  const auto g = make_theta(1, 1, 1);
  EXPECT_EQ(distance(g, Point::on_edge("e1", frac(1, 3)), Point::on_edge("e2", frac(1, 3))), frac(2, 3));
}

TEST(Distance, SamePointIsZero) {
  const auto g = make_theta(1, 1, 1);
  const auto p = Point::on_edge("e3", frac(5, 7));
  EXPECT_EQ(distance(g, p, p), 0);
}

TEST(Distance, K4Adjacent) {
  const auto g = make_complete(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      EXPECT_EQ(distance(g, Point::vertex(g.vertex_id(i)), Point::vertex(g.vertex_id(j))), 1);
}

TEST(Distance, SameEdgeGoingAround) {
  // Short loop edge beside a long direct edge: the two points on the long
  // edge are closer by leaving it.
  const auto g = MetricGraph::build({"a", "b"}, {{"long", "a", "b", Rational(10)}, {"short", "a", "b", Rational(1)}});
  EXPECT_EQ(distance(g, Point::on_edge("long", Rational(1)), Point::on_edge("long", Rational(9))), 3);
  EXPECT_EQ(distance(g, Point::on_edge("long", Rational(4)), Point::on_edge("long", Rational(6))), 2);
}

TEST(Distance, SelfLoop) {
  const auto g = MetricGraph::build({"a"}, {{"loop", "a", "a", Rational(4)}});
  EXPECT_EQ(distance(g, Point::vertex("a"), Point::on_edge("loop", Rational(3))), 1);
  EXPECT_EQ(distance(g, Point::on_edge("loop", Rational(1)), Point::on_edge("loop", Rational(3))), 2);
}

TEST(DistanceMatrix, Examples) {
  const auto g = make_theta(1, 1, 1);
  const std::vector<Point> one{Point::vertex("u")};
  const auto m1 = distance_matrix(g, one);
  EXPECT_EQ(m1.size(), 1u);
  EXPECT_EQ(m1(0, 0), 0);

  const std::vector<Point> two{Point::on_edge("e1", frac(1, 2)), Point::on_edge("e1", frac(1, 2))};
  const auto m2 = distance_matrix(g, two);
  EXPECT_EQ(m2(0, 1), 0);
  EXPECT_EQ(m2.labels[0], m2.labels[1]);

  const std::vector<Point> three{Point::vertex("u"), Point::vertex("v"), Point::on_edge("e1", frac(1, 2))};
  const auto m3 = distance_matrix(g, three);
  EXPECT_EQ(m3(0, 1), 1);
  EXPECT_EQ(m3(0, 2), frac(1, 2));
  EXPECT_EQ(m3(1, 2), frac(1, 2));
  EXPECT_NO_THROW(m3.validate());
}

TEST(DistanceMatrix, AgreesWithRouteEnumeration) {
  std::mt19937_64 rng(11);
  std::size_t compared = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 2 + detail::uniform_below(rng, 5);
    const auto g = make_random_connected(n, n - 1 + detail::uniform_below(rng, 4), seed, frac(1, 2),
                                         seed % 3 == 0);
    const auto vd = verify::route_vertex_distances(g);
    std::vector<Point> pts;
    for (int k = 0; k < 5; ++k) {
      const Edge& e = g.edge(detail::uniform_below(rng, g.edge_count()));
      pts.push_back(canonical_point(g, Point::on_edge(e.id, e.length * frac(static_cast<long>(detail::uniform_below(rng, 9)), 8))));
    }
    const auto m = distance_matrix(g, pts);
    EXPECT_NO_THROW(m.validate());
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = 0; j < pts.size(); ++j) {
        EXPECT_EQ(m(i, j), verify::route_distance(g, pts[i], pts[j], vd));
        ++compared;
      }
  }
  EXPECT_EQ(compared, 40u * 25u);
}

TEST(ShortestPath, Examples) {
  const auto g = make_theta(1, 1, 1);
  const auto same = shortest_path(g, Point::vertex("u"), Point::vertex("u"));
  EXPECT_TRUE(same.segments.empty());
  EXPECT_EQ(same.length, 0);

  const auto uv = shortest_path(g, Point::vertex("u"), Point::vertex("v"));
  ASSERT_EQ(uv.segments.size(), 1u);
  EXPECT_EQ(uv.length, 1);

  const auto across = shortest_path(g, Point::on_edge("e1", frac(1, 3)), Point::on_edge("e2", frac(1, 3)));
  EXPECT_EQ(across.length, frac(2, 3));
  ASSERT_EQ(across.segments.size(), 2u);
  EXPECT_EQ(across.segments[0].edge, "e1");
  EXPECT_EQ(across.segments[0].to_offset, 0);  // through u
  EXPECT_EQ(across.segments[1].edge, "e2");
}

TEST(Subdivide, Counts) {
  const auto k4 = subdivide(make_complete(4), 2);
  EXPECT_EQ(k4.vertex_count(), 16u);
  EXPECT_EQ(k4.edge_count(), 18u);
  for (const auto& e : k4.edges()) EXPECT_EQ(e.length, 1);

  const auto k23 = subdivide(make_theta(1, 1, 1), 1);
  EXPECT_EQ(k23.vertex_count(), 5u);
  EXPECT_EQ(k23.edge_count(), 6u);
}

TEST(Subdivide, RejectsNonUnit) {
  EXPECT_THROW(subdivide(make_theta(1, 2, 1), 1), InputError);
  EXPECT_THROW(subdivide(make_theta(1, 1, 1), 0), InputError);
}

TEST(Subdivide, IsScaledCopyAtVertices) {
  const auto g = make_complete(4);
  const auto s = subdivide(g, 3);
  const auto scaled = scale(g, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const auto a = Point::vertex(g.vertex_id(i)), b = Point::vertex(g.vertex_id(j));
      EXPECT_EQ(distance(s, a, b), distance(scaled, a, b));
    }
  const auto p = Point::on_edge(g.edge(2).id, frac(5, 8));
  const auto q = Point::on_edge(g.edge(4).id, frac(1, 3));
  const auto ps = Point::on_edge(p.id(), p.offset() * 4), qs = Point::on_edge(q.id(), q.offset() * 4);
  EXPECT_EQ(distance(s, subdivision_point(g, s, 3, p), subdivision_point(g, s, 3, q)), distance(scaled, ps, qs));
}

TEST(Scale, Examples) {
  const auto g = make_theta(1, 1, 1);
  const auto two = scale(g, 2);
  for (const auto& e : two.edges()) EXPECT_EQ(e.length, 2);
  EXPECT_EQ(scale(g, 1), g);
  EXPECT_EQ(distance(scale(g, 3), Point::vertex("u"), Point::vertex("v")), 3);
  EXPECT_THROW(scale(g, 0), InputError);
}

TEST(FiniteMetric, ValidateCatchesProblems) {
  RationalMatrix d(3);
  d(0, 1) = d(1, 0) = 1;
  d(1, 2) = d(2, 1) = 1;
  d(0, 2) = d(2, 0) = 3;
  FiniteMetric m({"a", "b", "c"}, d);
  EXPECT_THROW(m.validate(), InputError);
  m.dist(0, 2) = m.dist(2, 0) = 2;
  EXPECT_NO_THROW(m.validate());
  m.dist(0, 2) = 1;
  EXPECT_THROW(m.validate(), InputError);
}

TEST(Weighting, AccumulatesAndDropsZeros) {
  Weighting w;
  w.add(2, frac(1, 3));
  w.add(2, frac(-1, 3));
  EXPECT_TRUE(w.empty());
  w.add(0, frac(1, 2));
  w.add(3, frac(-1, 2));
  EXPECT_EQ(w.sum(), 0);
  EXPECT_EQ(w.abs_sum(), 1);
  EXPECT_EQ(w.dense(4), (std::vector<Rational>{frac(1, 2), 0, 0, frac(-1, 2)}));
  EXPECT_EQ(Weighting::from_dense(w.dense(4)), w);
}
