#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "negtype/distance.hpp"
#include "negtype/graph.hpp"

namespace negtype {

/// Replaces every unit edge e by a path of k+1 unit edges. Internal
/// vertices are "<e>/1".."<e>/k" and the pieces "<e>/0".."<e>/k", ordered
/// from the tail of e.
inline MetricGraph subdivide(const MetricGraph& g, std::size_t k) {
  if (k == 0) throw InputError("subdivision count must be positive");
  for (const auto& e : g.edges())
    if (e.length != 1) throw InputError("subdivide needs unit edges; '" + e.id + "' has length " + to_string(e.length));

  std::set<std::string, std::less<>> taken(g.vertices().begin(), g.vertices().end());
  std::set<std::string, std::less<>> edge_taken;
  std::vector<std::string> vertices = g.vertices();
  std::vector<EdgeSpec> edges;
  for (const auto& e : g.edges()) {
    std::vector<std::string> chain{g.vertex_id(e.tail)};
    for (std::size_t j = 1; j <= k; ++j) {
      auto id = detail::fresh_id(taken, e.id + "/" + std::to_string(j));
      taken.insert(id);
      vertices.push_back(id);
      chain.push_back(std::move(id));
    }
    chain.push_back(g.vertex_id(e.head));
    for (std::size_t j = 0; j <= k; ++j) {
      auto id = detail::fresh_id(edge_taken, e.id + "/" + std::to_string(j));
      edge_taken.insert(id);
      edges.push_back({std::move(id), chain[j], chain[j + 1], Rational(1)});
    }
  }
  return MetricGraph::build(std::move(vertices), std::move(edges));
}

/// Point of sub = subdivide(g, k) at the same location as p in
/// scale(g, k+1). Relies on the index layout produced by subdivide.
inline Point subdivision_point(const MetricGraph& g, const MetricGraph& sub, std::size_t k,
                               const Point& p) {
  const Point c = canonical_point(g, p);
  if (c.is_vertex()) return c;
  const std::size_t e = g.edge_at(c.id());
  const Rational pos = c.offset() * static_cast<unsigned long>(k + 1);
  const mpz_class whole = pos.get_num() / pos.get_den();
  const std::size_t j = whole.get_ui();
  const Rational part = pos - Rational(whole);
  if (part == 0) return Point::vertex(sub.vertex_id(g.vertex_count() + e * k + (j - 1)));
  return Point::on_edge(sub.edge(e * (k + 1) + j).id, part);
}

/// Multiplies every edge length by t > 0.
inline MetricGraph scale(const MetricGraph& g, const Rational& t) {
  if (t <= 0) throw InputError("scale factor must be positive");
  auto specs = g.edge_specs();
  for (auto& s : specs) s.length *= t;
  return MetricGraph::build(g.vertices(), std::move(specs));
}

}  // namespace negtype
