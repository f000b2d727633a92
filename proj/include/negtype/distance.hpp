#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "negtype/finite_metric.hpp"
#include "negtype/graph.hpp"

namespace negtype {

namespace detail {

/// A graph refined at a set of points, in index form. Nodes below
/// g.vertex_count() are the original vertices; the rest sit inside edges.
struct Refinement {
  struct Arc {
    std::size_t to;
    std::size_t edge;
    Rational from_offset;
    Rational to_offset;
    Rational length;
  };
  struct Node {
    std::optional<std::size_t> vertex;
    std::size_t edge = 0;
    Rational offset;
  };

  std::vector<Node> nodes;
  std::vector<std::vector<Arc>> adj;
  /// Node of each requested point, in request order.
  std::vector<std::size_t> point_node;
  /// Per original edge: the chain of nodes from tail to head.
  std::vector<std::vector<std::size_t>> chains;
};

inline Refinement refine(const MetricGraph& g, std::span<const Point> points) {
  Refinement r;
  const std::size_t nv = g.vertex_count();
  r.nodes.resize(nv);
  for (std::size_t v = 0; v < nv; ++v) r.nodes[v].vertex = v;

  std::vector<std::map<Rational, std::size_t>> cuts(g.edge_count());
  std::vector<Point> canon;
  canon.reserve(points.size());
  for (const auto& p : points) {
    canon.push_back(canonical_point(g, p));
    const auto& c = canon.back();
    if (c.is_vertex()) continue;
    const auto e = g.edge_at(c.id());
    cuts[e].try_emplace(c.offset(), 0);
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    for (auto& [off, node] : cuts[e]) {
      node = r.nodes.size();
      r.nodes.push_back({std::nullopt, e, off});
    }
  for (const auto& c : canon) {
    if (c.is_vertex())
      r.point_node.push_back(g.vertex_at(c.id()));
    else
      r.point_node.push_back(cuts[g.edge_at(c.id())].at(c.offset()));
  }

  r.adj.resize(r.nodes.size());
  r.chains.resize(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    auto& chain = r.chains[e];
    std::vector<Rational> offs;
    chain.push_back(edge.tail);
    offs.emplace_back(0);
    for (const auto& [off, node] : cuts[e]) {
      chain.push_back(node);
      offs.push_back(off);
    }
    chain.push_back(edge.head);
    offs.push_back(edge.length);
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      Rational len = offs[k + 1] - offs[k];
      r.adj[chain[k]].push_back({chain[k + 1], e, offs[k], offs[k + 1], len});
      r.adj[chain[k + 1]].push_back({chain[k], e, offs[k + 1], offs[k], len});
    }
  }
  return r;
}

struct SearchResult {
  std::vector<std::optional<Rational>> dist;
  /// Arc index into adj[pred_node] used to reach each node.
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> pred;
};

/// Label-setting shortest paths with exact comparisons. Stops early once
/// `target` is settled, when given.
inline SearchResult dijkstra(const Refinement& r, std::size_t source,
                             std::optional<std::size_t> target = std::nullopt) {
  const std::size_t n = r.nodes.size();
  SearchResult out;
  out.dist.assign(n, std::nullopt);
  out.pred.assign(n, std::nullopt);
  std::vector<char> done(n, 0);
  using Item = std::pair<Rational, std::size_t>;
  auto greater = [](const Item& a, const Item& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second > b.second;
  };
  std::priority_queue<Item, std::vector<Item>, decltype(greater)> heap(greater);
  out.dist[source] = Rational(0);
  heap.emplace(Rational(0), source);
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (done[v]) continue;
    done[v] = 1;
    if (target && v == *target) break;
    for (std::size_t a = 0; a < r.adj[v].size(); ++a) {
      const auto& arc = r.adj[v][a];
      Rational nd = d + arc.length;
      if (!out.dist[arc.to] || nd < *out.dist[arc.to]) {
        out.dist[arc.to] = nd;
        out.pred[arc.to] = std::make_pair(v, a);
        heap.emplace(std::move(nd), arc.to);
      }
    }
  }
  return out;
}

inline std::string fresh_id(const std::set<std::string, std::less<>>& taken, std::string base) {
  while (taken.count(base)) base += "'";
  return base;
}

}  // namespace detail

/// Refines g so that every requested point becomes a vertex. Interior
/// points get ids "<edge>@<offset>"; split edges become "<edge>#<k>",
/// numbered from the tail. Both ids are made unique with trailing primes.
inline std::pair<MetricGraph, std::map<Point, std::string>> insert_points(
    const MetricGraph& g, std::span<const Point> points) {
  const auto r = detail::refine(g, points);
  std::set<std::string, std::less<>> vertex_taken(g.vertices().begin(), g.vertices().end());
  std::set<std::string, std::less<>> edge_taken;
  for (const auto& e : g.edges()) edge_taken.insert(e.id);

  std::vector<std::string> node_id(r.nodes.size());
  std::vector<std::string> vertices = g.vertices();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) node_id[v] = g.vertex_id(v);
  for (std::size_t k = g.vertex_count(); k < r.nodes.size(); ++k) {
    const auto& node = r.nodes[k];
    node_id[k] = detail::fresh_id(vertex_taken,
                                  g.edge(node.edge).id + "@" + to_string(node.offset));
    vertex_taken.insert(node_id[k]);
    vertices.push_back(node_id[k]);
  }

  std::vector<EdgeSpec> edges;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    const auto& chain = r.chains[e];
    if (chain.size() == 2) {
      edges.push_back({edge.id, g.vertex_id(edge.tail), g.vertex_id(edge.head), edge.length});
      continue;
    }
    Rational prev(0);
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      const Rational next = k + 2 == chain.size() ? edge.length : r.nodes[chain[k + 1]].offset;
      auto id = detail::fresh_id(edge_taken, edge.id + "#" + std::to_string(k));
      edge_taken.insert(id);
      edges.push_back({std::move(id), node_id[chain[k]], node_id[chain[k + 1]], next - prev});
      prev = next;
    }
  }

  std::map<Point, std::string> mapping;
  for (std::size_t i = 0; i < points.size(); ++i)
    mapping.emplace(points[i], node_id[r.point_node[i]]);
  return {MetricGraph::build(std::move(vertices), std::move(edges)), std::move(mapping)};
}

/// Length of a shortest route between p and q in the continuous space.
inline Rational distance(const MetricGraph& g, const Point& p, const Point& q) {
  const Point pts[2] = {p, q};
  const auto r = detail::refine(g, pts);
  const auto s = r.point_node[0];
  const auto t = r.point_node[1];
  if (s == t) return Rational(0);
  return *detail::dijkstra(r, s, t).dist[t];
}

/// Pairwise distances between the given points. Labels are to_string(point).
inline FiniteMetric distance_matrix(const MetricGraph& g, std::span<const Point> points) {
  const auto r = detail::refine(g, points);
  const std::size_t n = points.size();
  RationalMatrix d(n);
  std::map<std::size_t, detail::SearchResult> runs;
  for (std::size_t i = 0; i < n; ++i) {
    const auto src = r.point_node[i];
    auto it = runs.find(src);
    if (it == runs.end()) it = runs.emplace(src, detail::dijkstra(r, src)).first;
    for (std::size_t j = 0; j < n; ++j) d(i, j) = *it->second.dist[r.point_node[j]];
  }
  // Exact arithmetic makes both directions equal already; force bitwise symmetry.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) d(i, j) = d(j, i);
  std::vector<std::string> labels;
  for (const auto& p : points) labels.push_back(to_string(canonical_point(g, p)));
  return {std::move(labels), std::move(d)};
}

/// One traversal of part of an edge, between two offsets.
struct PathSegment {
  std::string edge;
  Rational from_offset;
  Rational to_offset;

  Rational length() const { return abs(to_offset - from_offset); }
};

struct GraphPath {
  std::vector<PathSegment> segments;
  Rational length;
};

/// A shortest route from p to q; consecutive pieces of the same edge
/// traversed in the same direction are merged.
inline GraphPath shortest_path(const MetricGraph& g, const Point& p, const Point& q) {
  const Point pts[2] = {p, q};
  const auto r = detail::refine(g, pts);
  const auto s = r.point_node[0];
  const auto t = r.point_node[1];
  GraphPath path{{}, Rational(0)};
  if (s == t) return path;
  const auto run = detail::dijkstra(r, s, t);
  std::vector<const detail::Refinement::Arc*> arcs;
  for (auto v = t; v != s;) {
    const auto [from, a] = *run.pred[v];
    arcs.push_back(&r.adj[from][a]);
    v = from;
  }
  std::reverse(arcs.begin(), arcs.end());
  for (const auto* arc : arcs) {
    const auto& id = g.edge(arc->edge).id;
    if (!path.segments.empty()) {
      auto& last = path.segments.back();
      const bool same_dir = (last.to_offset > last.from_offset) == (arc->to_offset > arc->from_offset);
      if (last.edge == id && last.to_offset == arc->from_offset && same_dir) {
        last.to_offset = arc->to_offset;
        continue;
      }
    }
    path.segments.push_back({id, arc->from_offset, arc->to_offset});
  }
  for (const auto& seg : path.segments) path.length += seg.length();
  return path;
}

}  // namespace negtype
