#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "negtype/distance.hpp"
#include "negtype/error.hpp"
#include "negtype/graph.hpp"
#include "negtype/random.hpp"

namespace negtype {

/// A biconnected block of the loop-free part of a graph.
struct Block {
  std::vector<std::size_t> edges;
  std::vector<std::size_t> vertices;

  std::size_t cycle_rank() const { return edges.size() + 1 - vertices.size(); }
};

/// Biconnected blocks (Tarjan, edge-stack form). Self-loops are ignored;
/// parallel edges land in the same block.
inline std::vector<Block> blocks(const MetricGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, none), low(n, 0);
  std::vector<std::size_t> edge_stack;
  std::vector<Block> out;
  std::size_t clock = 0;

  struct Frame {
    std::size_t v;
    std::size_t parent_edge;
    std::size_t next = 0;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (disc[root] != none) continue;
    std::vector<Frame> stack{{root, none}};
    disc[root] = low[root] = clock++;
    while (!stack.empty()) {
      auto& f = stack.back();
      const auto inc = g.incident(f.v);
      if (f.next < inc.size()) {
        const auto e = inc[f.next++];
        const Edge& edge = g.edge(e);
        if (edge.is_loop() || e == f.parent_edge) continue;
        const auto w = edge.other(f.v);
        if (disc[w] == none) {
          edge_stack.push_back(e);
          disc[w] = low[w] = clock++;
          stack.push_back({w, e});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.push_back(e);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (stack.empty()) break;
      auto& parent = stack.back();
      low[parent.v] = std::min(low[parent.v], low[done.v]);
      if (low[done.v] >= disc[parent.v]) {
        Block b;
        std::set<std::size_t> vs;
        while (true) {
          const auto e = edge_stack.back();
          edge_stack.pop_back();
          b.edges.push_back(e);
          vs.insert(g.edge(e).tail);
          vs.insert(g.edge(e).head);
          if (e == done.parent_edge) break;
        }
        std::sort(b.edges.begin(), b.edges.end());
        b.vertices.assign(vs.begin(), vs.end());
        out.push_back(std::move(b));
      }
    }
  }
  return out;
}

struct DirectedEdge {
  std::string edge;
  bool forward = true;  // traversed tail -> head

  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

struct ThetaPath {
  std::vector<DirectedEdge> edges;
  std::vector<std::string> vertices;  // u, ..., v
  Rational length;
};

/// Two branch vertices joined by three internally disjoint paths, sorted
/// by length (ties by edge-id sequence).
struct Theta {
  std::string u;
  std::string v;
  std::array<ThetaPath, 3> paths;
  Rational total;
};

namespace detail {

inline std::vector<std::string> edge_ids(const ThetaPath& p) {
  std::vector<std::string> ids;
  for (const auto& d : p.edges) ids.push_back(d.edge);
  return ids;
}

/// Ordering used to pick among equally short thetas.
inline bool theta_less(const Theta& a, const Theta& b) {
  if (a.total != b.total) return a.total < b.total;
  if (a.paths[0].length != b.paths[0].length) return a.paths[0].length < b.paths[0].length;
  if (a.paths[1].length != b.paths[1].length) return a.paths[1].length < b.paths[1].length;
  if (a.u != b.u) return a.u < b.u;
  if (a.v != b.v) return a.v < b.v;
  for (std::size_t i = 0; i < 3; ++i) {
    auto x = edge_ids(a.paths[i]);
    auto y = edge_ids(b.paths[i]);
    if (x != y) return x < y;
  }
  return false;
}

/// Minimum-cost flow of value 3 from s to t on the vertex-split network:
/// every vertex other than s, t has capacity 1, every edge capacity 1 and
/// cost equal to its length. Successive shortest paths with potentials.
/// Only edges flagged in `allowed` are used.
inline std::optional<Theta> cheapest_three_paths(const MetricGraph& g, std::size_t s, std::size_t t,
                                                 const std::vector<char>& allowed) {
  struct Arc {
    std::size_t to;
    std::size_t rev;
    int cap;
    Rational cost;
    std::size_t edge;  // npos for split arcs
    bool residual;     // reverse arc of the residual network
  };
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Arc>> net(2 * n);
  auto in = [](std::size_t v) { return 2 * v; };
  auto out = [](std::size_t v) { return 2 * v + 1; };
  auto add = [&](std::size_t a, std::size_t b, int cap, const Rational& cost, std::size_t edge) {
    net[a].push_back({b, net[b].size(), cap, cost, edge, false});
    net[b].push_back({a, net[a].size() - 1, 0, Rational(-cost), edge, true});
  };
  for (std::size_t v = 0; v < n; ++v) add(in(v), out(v), (v == s || v == t) ? 3 : 1, Rational(0), npos);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (!allowed[e] || edge.is_loop()) continue;
    add(out(edge.tail), in(edge.head), 1, edge.length, e);
    add(out(edge.head), in(edge.tail), 1, edge.length, e);
  }

  const std::size_t source = out(s);
  const std::size_t sink = in(t);
  std::vector<Rational> potential(2 * n, Rational(0));
  for (int round = 0; round < 3; ++round) {
    std::vector<std::optional<Rational>> dist(2 * n);
    std::vector<std::pair<std::size_t, std::size_t>> pred(2 * n, {npos, npos});
    std::vector<char> done(2 * n, 0);
    using Item = std::pair<Rational, std::size_t>;
    auto greater = [](const Item& a, const Item& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second > b.second;
    };
    std::priority_queue<Item, std::vector<Item>, decltype(greater)> heap(greater);
    dist[source] = Rational(0);
    heap.emplace(Rational(0), source);
    while (!heap.empty()) {
      auto [d, x] = heap.top();
      heap.pop();
      if (done[x]) continue;
      done[x] = 1;
      for (std::size_t a = 0; a < net[x].size(); ++a) {
        const Arc& arc = net[x][a];
        if (arc.cap <= 0) continue;
        Rational nd = d + arc.cost + potential[x] - potential[arc.to];
        if (!dist[arc.to] || nd < *dist[arc.to]) {
          dist[arc.to] = nd;
          pred[arc.to] = {x, a};
          heap.emplace(std::move(nd), arc.to);
        }
      }
    }
    if (!dist[sink]) return std::nullopt;
    for (std::size_t x = 0; x < 2 * n; ++x)
      if (dist[x]) potential[x] += *dist[x];
    for (std::size_t x = sink; x != source;) {
      auto [p, a] = pred[x];
      Arc& arc = net[p][a];
      arc.cap -= 1;
      net[arc.to][arc.rev].cap += 1;
      x = p;
    }
  }

  // Forward edge arcs carrying flow have cap 0; each is consumed once.
  Theta theta;
  theta.u = g.vertex_id(s);
  theta.v = g.vertex_id(t);
  std::vector<std::vector<std::size_t>> used(2 * n);
  for (std::size_t x = 0; x < 2 * n; ++x)
    for (std::size_t a = 0; a < net[x].size(); ++a) {
      const Arc& arc = net[x][a];
      if (!arc.residual && arc.edge != npos && arc.cap == 0) used[x].push_back(a);
    }
  for (std::size_t k = 0; k < 3; ++k) {
    ThetaPath path;
    path.length = 0;
    path.vertices.push_back(g.vertex_id(s));
    std::size_t at = s;
    while (true) {
      auto& bucket = used[out(at)];
      if (bucket.empty()) throw InternalError("flow decomposition lost a path");
      const Arc& arc = net[out(at)][bucket.back()];
      bucket.pop_back();
      const Edge& edge = g.edge(arc.edge);
      const std::size_t next = arc.to / 2;
      path.edges.push_back({edge.id, edge.tail == at});
      path.length += edge.length;
      path.vertices.push_back(g.vertex_id(next));
      at = next;
      if (at == t) break;
    }
    theta.paths[k] = std::move(path);
  }
  std::sort(theta.paths.begin(), theta.paths.end(), [](const ThetaPath& a, const ThetaPath& b) {
    if (a.length != b.length) return a.length < b.length;
    return edge_ids(a) < edge_ids(b);
  });
  theta.total = theta.paths[0].length + theta.paths[1].length + theta.paths[2].length;
  return theta;
}

/// Candidate branch pairs: both ends of degree >= 3 and sharing a block of
/// cycle rank >= 2. Returned with the block's edge mask.
inline std::vector<std::tuple<std::size_t, std::size_t, std::vector<char>>> branch_candidates(
    const MetricGraph& g, bool first_block_only) {
  std::vector<std::tuple<std::size_t, std::size_t, std::vector<char>>> out;
  for (const auto& b : blocks(g)) {
    if (b.cycle_rank() < 2) continue;
    std::vector<char> mask(g.edge_count(), 0);
    std::vector<std::size_t> local_degree(g.vertex_count(), 0);
    for (auto e : b.edges) {
      mask[e] = 1;
      ++local_degree[g.edge(e).tail];
      ++local_degree[g.edge(e).head];
    }
    for (std::size_t i = 0; i < b.vertices.size(); ++i)
      for (std::size_t j = i + 1; j < b.vertices.size(); ++j) {
        const auto x = b.vertices[i];
        const auto y = b.vertices[j];
        if (local_degree[x] >= 3 && local_degree[y] >= 3) out.emplace_back(x, y, mask);
      }
    if (first_block_only) break;
  }
  return out;
}

}  // namespace detail

/// Some theta of g, or nullopt when g is theta-free (every block has cycle
/// rank at most 1).
inline std::optional<Theta> find_theta(const MetricGraph& g) {
  for (const auto& [x, y, mask] : detail::branch_candidates(g, true))
    if (auto t = detail::cheapest_three_paths(g, x, y, mask)) return t;
  return std::nullopt;
}

/// A theta of minimum total length. Throws PreconditionError on theta-free
/// graphs.
inline Theta minimal_theta(const MetricGraph& g) {
  std::optional<Theta> best;
  for (const auto& [x, y, mask] : detail::branch_candidates(g, false)) {
    auto t = detail::cheapest_three_paths(g, x, y, mask);
    if (t && (!best || detail::theta_less(*t, *best))) best = std::move(t);
  }
  if (!best) throw PreconditionError("graph is theta-free");
  return *best;
}

/// Checks the structural invariants of a theta against g; returns an empty
/// string when they hold, otherwise a description of the first failure.
inline std::string theta_defect(const MetricGraph& g, const Theta& t) {
  if (t.u == t.v) return "branch vertices coincide";
  std::set<std::string> interior;
  std::set<std::string> edges_seen;
  Rational total(0);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& p = t.paths[i];
    if (p.edges.empty() || p.vertices.size() != p.edges.size() + 1) return "malformed path";
    if (p.vertices.front() != t.u || p.vertices.back() != t.v) return "path does not join u and v";
    Rational len(0);
    for (std::size_t k = 0; k < p.edges.size(); ++k) {
      const Edge& e = g.edge(g.edge_at(p.edges[k].edge));
      const auto& from = p.edges[k].forward ? e.tail : e.head;
      const auto& to = p.edges[k].forward ? e.head : e.tail;
      if (g.vertex_id(from) != p.vertices[k] || g.vertex_id(to) != p.vertices[k + 1])
        return "path edges are not consecutive";
      if (!edges_seen.insert(e.id).second) return "edge reused";
      len += e.length;
    }
    for (std::size_t k = 1; k + 1 < p.vertices.size(); ++k)
      if (p.vertices[k] == t.u || p.vertices[k] == t.v || !interior.insert(p.vertices[k]).second)
        return "paths are not internally disjoint";
    if (len != p.length || len <= 0) return "path length mismatch";
    if (i > 0 && t.paths[i - 1].length > p.length) return "paths not sorted";
    total += len;
  }
  if (total != t.total) return "total mismatch";
  return {};
}

/// A point of a theta: arclength from u along one of its paths (0-based).
/// Arclength 0 is u and arclength == path length is v on every path.
struct ThetaPoint {
  std::size_t path = 0;
  Rational arclength;
};

inline bool is_branch_u(const ThetaPoint& p) { return p.arclength == 0; }
inline bool is_branch_v(const Theta& t, const ThetaPoint& p) {
  return p.arclength == t.paths.at(p.path).length;
}

inline bool same_point(const Theta& t, const ThetaPoint& a, const ThetaPoint& b) {
  if (is_branch_u(a) || is_branch_u(b)) return is_branch_u(a) && is_branch_u(b);
  if (is_branch_v(t, a) || is_branch_v(t, b)) return is_branch_v(t, a) && is_branch_v(t, b);
  return a.path == b.path && a.arclength == b.arclength;
}

inline void check_theta_point(const Theta& t, const ThetaPoint& p) {
  if (p.path > 2) throw InputError("theta path index out of range");
  if (p.arclength < 0 || p.arclength > t.paths[p.path].length)
    throw InputError("theta point outside its path");
}

/// Intrinsic distance d_T inside the theta, ignoring the ambient graph.
inline Rational theta_distance(const Theta& t, const ThetaPoint& a, const ThetaPoint& b) {
  check_theta_point(t, a);
  check_theta_point(t, b);
  const Rational& uv = t.paths[0].length;
  const Rational au = a.arclength;
  const Rational av = t.paths[a.path].length - a.arclength;
  const Rational bu = b.arclength;
  const Rational bv = t.paths[b.path].length - b.arclength;
  Rational best = au + bu;
  auto consider = [&](const Rational& c) {
    if (c < best) best = c;
  };
  consider(av + bv);
  consider(au + uv + bv);
  consider(av + uv + bu);
  if (a.path == b.path) consider(abs(a.arclength - b.arclength));
  return best;
}

/// The graph point at a theta point.
inline Point to_point(const MetricGraph& g, const Theta& t, const ThetaPoint& p) {
  check_theta_point(t, p);
  const auto& path = t.paths[p.path];
  Rational start(0);
  for (const auto& step : path.edges) {
    const Edge& e = g.edge(g.edge_at(step.edge));
    const Rational end = start + e.length;
    if (p.arclength <= end) {
      const Rational along = p.arclength - start;
      return canonical_point(g, Point::on_edge(e.id, step.forward ? along : Rational(e.length - along)));
    }
    start = end;
  }
  throw InternalError("theta point past the end of its path");
}

struct LemmaSample {
  ThetaPoint x;
  ThetaPoint y;
};

struct LemmaViolation {
  LemmaSample sample;
  Rational ambient;
  Rational intrinsic;
};

struct LemmaReport {
  std::size_t checked = 0;
  std::vector<LemmaViolation> violations;

  bool passed() const { return violations.empty(); }
};

/// For x within 1/2 of u on the minimal theta t of g (all edges >= 1),
/// ambient and intrinsic distances from x agree. Any violation is a bug.
inline LemmaReport check_branch_distance_lemma(const MetricGraph& g, const Theta& t,
                                               const std::vector<LemmaSample>& samples) {
  if (g.min_edge_length() < 1) throw PreconditionError("branch-distance check needs all edges >= 1");
  const ThetaPoint u{0, Rational(0)};
  LemmaReport report;
  for (const auto& s : samples) {
    if (theta_distance(t, s.x, u) > frac(1, 2))
      throw PreconditionError("sample x is farther than 1/2 from u");
    const Rational ambient = distance(g, to_point(g, t, s.x), to_point(g, t, s.y));
    const Rational intrinsic = theta_distance(t, s.x, s.y);
    ++report.checked;
    if (ambient != intrinsic) report.violations.push_back({s, ambient, intrinsic});
  }
  return report;
}

/// Seeded samples: x at arclength j/120 (j <= 60) on a random path,
/// y anywhere on a random path at a multiple of length/60.
inline std::vector<LemmaSample> sample_lemma_pairs(const Theta& t, std::size_t count,
                                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto below = [&](std::uint64_t b) { return detail::uniform_below(rng, b); };
  std::vector<LemmaSample> out;
  for (std::size_t i = 0; i < count; ++i) {
    LemmaSample s;
    s.x.path = below(3);
    s.x.arclength = frac(static_cast<long>(below(61)), 120);
    if (s.x.arclength > t.paths[s.x.path].length) s.x.arclength = t.paths[s.x.path].length;
    s.y.path = below(3);
    s.y.arclength = t.paths[s.y.path].length * frac(static_cast<long>(below(61)), 60);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace negtype
