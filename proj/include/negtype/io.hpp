#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "negtype/error.hpp"
#include "negtype/finite_metric.hpp"
#include "negtype/graph.hpp"
#include "negtype/rational.hpp"

namespace negtype {

using Json = nlohmann::ordered_json;

inline Json rational_to_json(const Rational& r) { return to_string(r); }

/// Accepts "p/q" strings and plain JSON integers.
inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(mpz_class(j.dump()));
  throw InputError("expected a rational string, got " + j.dump());
}

namespace detail {

inline const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::string require_string(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_string()) throw InputError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace detail

inline Json graph_to_json(const MetricGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges())
    edges.push_back({{"id", e.id},
                     {"ends", {g.vertex_id(e.tail), g.vertex_id(e.head)}},
                     {"length", rational_to_json(e.length)}});
  return {{"vertices", g.vertices()}, {"edges", std::move(edges)}};
}

inline MetricGraph graph_from_json(const Json& j) {
  const Json& vs = detail::require(j, "vertices");
  const Json& es = detail::require(j, "edges");
  if (!vs.is_array() || !es.is_array()) throw InputError("'vertices' and 'edges' must be arrays");
  std::vector<std::string> vertices;
  for (const auto& v : vs) {
    if (!v.is_string()) throw InputError("vertex ids must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<EdgeSpec> edges;
  for (const auto& e : es) {
    const Json& ends = detail::require(e, "ends");
    if (!ends.is_array() || ends.size() != 2 || !ends[0].is_string() || !ends[1].is_string())
      throw InputError("'ends' must be a pair of vertex ids");
    edges.push_back({detail::require_string(e, "id"), ends[0].get<std::string>(), ends[1].get<std::string>(),
                     rational_from_json(detail::require(e, "length"))});
  }
  return MetricGraph::build(std::move(vertices), std::move(edges));
}

inline Json point_to_json(const Point& p) {
  if (p.is_vertex()) return {{"vertex", p.id()}};
  return {{"edge", p.id()}, {"offset", rational_to_json(p.offset())}};
}

inline Point point_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("a point must be an object");
  if (j.contains("vertex")) {
    if (j.size() != 1) throw InputError("vertex point takes no other fields");
    return Point::vertex(detail::require_string(j, "vertex"));
  }
  if (j.size() != 2) throw InputError("edge point needs exactly 'edge' and 'offset'");
  return Point::on_edge(detail::require_string(j, "edge"), rational_from_json(detail::require(j, "offset")));
}

inline Json points_to_json(const std::vector<Point>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(point_to_json(p));
  return out;
}

/// A JSON array of points, or an object with a "points" array.
inline std::vector<Point> points_from_json(const Json& j) {
  const Json& arr = j.is_object() ? detail::require(j, "points") : j;
  if (!arr.is_array()) throw InputError("points must be an array");
  std::vector<Point> out;
  for (const auto& p : arr) out.push_back(point_from_json(p));
  return out;
}

inline Json weighting_to_json(const Weighting& w, std::size_t n) {
  Json out = Json::array();
  for (const auto& v : w.dense(n)) out.push_back(rational_to_json(v));
  return out;
}

inline Weighting weighting_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("weighting must be an array");
  std::vector<Rational> dense;
  for (const auto& v : j) dense.push_back(rational_from_json(v));
  return Weighting::from_dense(dense);
}

inline Json metric_to_json(const FiniteMetric& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(rational_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"labels", m.labels}, {"distances", std::move(rows)}};
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(what + ": " + e.what());
  }
}

inline Json read_json_file(const std::string& path) { return parse_json(read_text_file(path), path); }

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline MetricGraph read_graph_file(const std::string& path) { return graph_from_json(read_json_file(path)); }

inline std::vector<Point> read_points_file(const std::string& path) {
  return points_from_json(read_json_file(path));
}

}  // namespace negtype
