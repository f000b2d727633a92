#include <gtest/gtest.h>

#include <filesystem>

#include "negtype/families.hpp"
#include "negtype/io.hpp"

using namespace negtype;

TEST(RationalJson, RoundTrip) {
  for (const Rational& r : {Rational(0), frac(-3, 4), Rational(17), frac(1, 12)})
    EXPECT_EQ(rational_from_json(rational_to_json(r)), r);
  EXPECT_EQ(rational_from_json(Json(5)), 5);
  EXPECT_EQ(rational_to_json(frac(2, 4)), Json("1/2"));
  EXPECT_THROW(rational_from_json(Json(0.5)), InputError);
  EXPECT_THROW(rational_from_json(Json("x")), InputError);
}

TEST(GraphJson, RoundTrip) {
  for (const auto& g : {make_theta(1, frac(3, 2), 2), make_complete(4), make_complete_bipartite(2, 3),
                        make_random_connected(6, 9, 4, Rational(1), true)}) {
    const auto back = graph_from_json(graph_to_json(g));
    EXPECT_EQ(graph_to_json(back), graph_to_json(g));
    EXPECT_EQ(back.vertex_count(), g.vertex_count());
    EXPECT_EQ(back.edge_count(), g.edge_count());
  }
}

TEST(GraphJson, Errors) {
  EXPECT_THROW(graph_from_json(Json::object()), InputError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"vertices": ["a"], "edges": {}})")), InputError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"vertices": [1], "edges": []})")), InputError);
  EXPECT_THROW(graph_from_json(Json::parse(
                   R"({"vertices": ["a","b"], "edges": [{"id":"e","ends":["a"],"length":"1"}]})")),
               InputError);
  EXPECT_THROW(graph_from_json(Json::parse(
                   R"({"vertices": ["a","b"], "edges": [{"id":"e","ends":["a","c"],"length":"1"}]})")),
               InputError);
  EXPECT_THROW(graph_from_json(Json::parse(
                   R"({"vertices": ["a","b"], "edges": [{"id":"e","ends":["a","b"],"length":"-1"}]})")),
               InputError);
}

TEST(PointJson, RoundTrip) {
  const std::vector<Point> ps{Point::vertex("u"), Point::on_edge("e1", frac(1, 3))};
  EXPECT_EQ(points_from_json(points_to_json(ps)), ps);
  Json wrapped{{"points", points_to_json(ps)}};
  EXPECT_EQ(points_from_json(wrapped), ps);
}

TEST(PointJson, Errors) {
  EXPECT_THROW(point_from_json(Json::array()), InputError);
  EXPECT_THROW(point_from_json(Json::parse(R"({"vertex": "u", "offset": "1"})")), InputError);
  EXPECT_THROW(point_from_json(Json::parse(R"({"edge": "e1"})")), InputError);
  EXPECT_THROW(points_from_json(Json(3)), InputError);
}

TEST(WeightingJson, RoundTrip) {
  Weighting w;
  w.add(0, frac(1, 2));
  w.add(2, frac(-1, 2));
  const Json j = weighting_to_json(w, 3);
  EXPECT_EQ(j, Json::parse(R"(["1/2", "0", "-1/2"])"));
  EXPECT_EQ(weighting_from_json(j), w);
  EXPECT_THROW(weighting_from_json(Json::object()), InputError);
}

TEST(MetricJson, Layout) {
  RationalMatrix d(2);
  d(0, 1) = d(1, 0) = frac(5, 2);
  const Json j = metric_to_json(FiniteMetric({"a", "b"}, d));
  EXPECT_EQ(j.at("labels"), Json::parse(R"(["a", "b"])"));
  EXPECT_EQ(j.at("distances").at(0).at(1), Json("5/2"));
}

TEST(Files, ReadWrite) {
  const auto dir = std::filesystem::temp_directory_path() / "negtype_io_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "g.json").string();
  write_text_file(path, dump(graph_to_json(make_theta(1, 1, 1))));
  EXPECT_EQ(graph_to_json(read_graph_file(path)), graph_to_json(make_theta(1, 1, 1)));
  write_text_file(path, "{ not json");
  EXPECT_THROW(read_graph_file(path), InputError);
  EXPECT_THROW(read_graph_file((dir / "missing.json").string()), InputError);
  std::filesystem::remove_all(dir);
}
