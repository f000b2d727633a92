#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "negtype/error.hpp"
#include "negtype/rational.hpp"

namespace negtype {

struct EdgeSpec {
  std::string id;
  std::string tail;
  std::string head;
  Rational length;
};

struct Edge {
  std::string id;
  std::size_t tail = 0;
  std::size_t head = 0;
  Rational length;

  bool is_loop() const { return tail == head; }
  std::size_t other(std::size_t v) const { return v == tail ? head : tail; }
};

/// A connected metric graph: finitely many segments glued at their
/// endpoints. Parallel edges and self-loops are allowed. Immutable once
/// built.
class MetricGraph {
 public:
  /// Validates and builds. Throws InputError on duplicate ids, nonpositive
  /// lengths, dangling endpoints or a disconnected result.
  static MetricGraph build(std::vector<std::string> vertices, std::vector<EdgeSpec> edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::string& vertex_id(std::size_t v) const { return vertices_.at(v); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }

  std::optional<std::size_t> find_vertex(std::string_view id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::size_t> find_edge(std::string_view id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t vertex_at(std::string_view id) const {
    auto v = find_vertex(id);
    if (!v) throw InputError("unknown vertex '" + std::string(id) + "'");
    return *v;
  }
  std::size_t edge_at(std::string_view id) const {
    auto e = find_edge(id);
    if (!e) throw InputError("unknown edge '" + std::string(id) + "'");
    return *e;
  }

  /// Edge indices incident to v; a self-loop is listed once.
  std::span<const std::size_t> incident(std::size_t v) const { return incident_.at(v); }

  /// Number of non-loop edge ends at v (parallel edges counted).
  std::size_t degree(std::size_t v) const {
    std::size_t d = 0;
    for (auto e : incident_.at(v))
      if (!edges_[e].is_loop()) ++d;
    return d;
  }

  std::vector<EdgeSpec> edge_specs() const {
    std::vector<EdgeSpec> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_)
      out.push_back({e.id, vertices_[e.tail], vertices_[e.head], e.length});
    return out;
  }

  Rational min_edge_length() const {
    Rational best;
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (i == 0 || edges_[i].length < best) best = edges_[i].length;
    return best;
  }

  friend bool operator==(const MetricGraph& a, const MetricGraph& b) {
    if (a.vertices_ != b.vertices_ || a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
      const auto& x = a.edges_[i];
      const auto& y = b.edges_[i];
      if (x.id != y.id || x.tail != y.tail || x.head != y.head || x.length != y.length)
        return false;
    }
    return true;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::map<std::string, std::size_t, std::less<>> vertex_index_;
  std::map<std::string, std::size_t, std::less<>> edge_index_;
  std::vector<std::vector<std::size_t>> incident_;
};

inline MetricGraph MetricGraph::build(std::vector<std::string> vertices,
                                      std::vector<EdgeSpec> edges) {
  MetricGraph g;
  if (vertices.empty()) throw InputError("graph has no vertices");
  for (auto& id : vertices) {
    if (id.empty()) throw InputError("empty vertex id");
    if (!g.vertex_index_.emplace(id, g.vertices_.size()).second)
      throw InputError("duplicate vertex id '" + id + "'");
    g.vertices_.push_back(std::move(id));
  }
  g.incident_.resize(g.vertices_.size());
  for (auto& spec : edges) {
    if (spec.id.empty()) throw InputError("empty edge id");
    if (spec.length <= 0)
      throw InputError("edge '" + spec.id + "' has nonpositive length " + to_string(spec.length));
    auto t = g.find_vertex(spec.tail);
    auto h = g.find_vertex(spec.head);
    if (!t || !h) throw InputError("edge '" + spec.id + "' has a dangling endpoint");
    if (!g.edge_index_.emplace(spec.id, g.edges_.size()).second)
      throw InputError("duplicate edge id '" + spec.id + "'");
    const std::size_t e = g.edges_.size();
    g.edges_.push_back({std::move(spec.id), *t, *h, std::move(spec.length)});
    g.incident_[*t].push_back(e);
    if (*h != *t) g.incident_[*h].push_back(e);
  }

  std::vector<char> seen(g.vertices_.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto e : g.incident_[v]) {
      const auto w = g.edges_[e].other(v);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != g.vertices_.size()) throw InputError("graph is disconnected");
  return g;
}

/// A location in the metric graph: a vertex, or a point on an edge at an
/// offset measured from the edge's first declared endpoint.
class Point {
 public:
  /// Placeholder (vertex with empty id) until assigned.
  Point() : Point(true, std::string(), Rational(0)) {}
  static Point vertex(std::string id) { return Point(true, std::move(id), Rational(0)); }
  static Point on_edge(std::string edge, Rational offset) {
    return Point(false, std::move(edge), std::move(offset));
  }

  bool is_vertex() const { return is_vertex_; }
  /// Vertex id or edge id depending on the kind.
  const std::string& id() const { return id_; }
  const Rational& offset() const { return offset_; }

  friend bool operator==(const Point& a, const Point& b) {
    return a.is_vertex_ == b.is_vertex_ && a.id_ == b.id_ && a.offset_ == b.offset_;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  friend bool operator<(const Point& a, const Point& b) {
    if (a.is_vertex_ != b.is_vertex_) return a.is_vertex_;
    if (a.id_ != b.id_) return a.id_ < b.id_;
    return a.offset_ < b.offset_;
  }

 private:
  Point(bool v, std::string id, Rational off)
      : is_vertex_(v), id_(std::move(id)), offset_(std::move(off)) {}

  bool is_vertex_;
  std::string id_;
  Rational offset_;
};

/// "u" for a vertex, "e1@1/12" for an edge point.
inline std::string to_string(const Point& p) {
  return p.is_vertex() ? p.id() : p.id() + "@" + to_string(p.offset());
}

/// Validates p against g and rewrites edge endpoints as vertices.
inline Point canonical_point(const MetricGraph& g, const Point& p) {
  if (p.is_vertex()) {
    g.vertex_at(p.id());
    return p;
  }
  const Edge& e = g.edge(g.edge_at(p.id()));
  if (p.offset() < 0 || p.offset() > e.length)
    throw InputError("offset " + to_string(p.offset()) + " outside edge '" + e.id + "'");
  if (p.offset() == 0) return Point::vertex(g.vertex_id(e.tail));
  if (p.offset() == e.length) return Point::vertex(g.vertex_id(e.head));
  return p;
}

}  // namespace negtype
