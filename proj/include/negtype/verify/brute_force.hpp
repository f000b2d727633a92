#pragma once

// Slow reference implementations used as test oracles. Each one is written
// independently of the production algorithm it checks.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "negtype/finite_metric.hpp"
#include "negtype/graph.hpp"
#include "negtype/rational.hpp"

namespace negtype::verify {

/// Vertex-to-vertex distances by enumerating every simple path.
inline std::vector<std::vector<std::optional<Rational>>> route_vertex_distances(const MetricGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::optional<Rational>>> best(n, std::vector<std::optional<Rational>>(n));
  std::vector<char> on_path(n, 0);
  std::function<void(std::size_t, std::size_t, const Rational&)> walk = [&](std::size_t s, std::size_t v,
                                                                            const Rational& len) {
    if (!best[s][v] || len < *best[s][v]) best[s][v] = len;
    on_path[v] = 1;
    for (auto e : g.incident(v)) {
      const Edge& edge = g.edge(e);
      if (edge.is_loop()) continue;
      const auto w = edge.other(v);
      if (!on_path[w]) walk(s, w, len + edge.length);
    }
    on_path[v] = 0;
  };
  for (std::size_t s = 0; s < n; ++s) walk(s, s, Rational(0));
  return best;
}

/// d(p, q) as the best of: the direct stretch when both lie on one edge, or
/// leaving p's edge through an end, a simple vertex route, and entering q's
/// edge through an end.
inline Rational route_distance(const MetricGraph& g, const Point& p, const Point& q,
                               const std::vector<std::vector<std::optional<Rational>>>& vd) {
  struct Exit {
    std::size_t vertex;
    Rational cost;
  };
  auto exits = [&](const Point& x) {
    std::vector<Exit> out;
    if (x.is_vertex()) {
      out.push_back({g.vertex_at(x.id()), Rational(0)});
    } else {
      const Edge& e = g.edge(g.edge_at(x.id()));
      out.push_back({e.tail, x.offset()});
      out.push_back({e.head, e.length - x.offset()});
    }
    return out;
  };
  std::optional<Rational> best;
  if (!p.is_vertex() && !q.is_vertex() && p.id() == q.id()) best = abs(Rational(p.offset() - q.offset()));
  for (const auto& a : exits(p))
    for (const auto& b : exits(q)) {
      const auto& mid = vd[a.vertex][b.vertex];
      if (!mid) continue;
      Rational c = a.cost + *mid + b.cost;
      if (!best || c < *best) best = c;
    }
  return *best;
}

inline Rational route_distance(const MetricGraph& g, const Point& p, const Point& q) {
  return route_distance(g, p, q, route_vertex_distances(g));
}

/// Smallest total length over all thetas, found by listing every simple
/// path between every vertex pair and trying all triples.
inline std::optional<Rational> brute_force_min_theta_total(const MetricGraph& g) {
  const std::size_t n = g.vertex_count();
  struct SimplePath {
    std::vector<std::size_t> edges;
    std::vector<std::size_t> interior;
    Rational length;
  };
  std::optional<Rational> best;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = s + 1; t < n; ++t) {
      std::vector<SimplePath> paths;
      std::vector<char> on_path(n, 0);
      std::vector<std::size_t> edges, verts;
      std::function<void(std::size_t, const Rational&)> walk = [&](std::size_t v, const Rational& len) {
        if (v == t) {
          paths.push_back({edges, {verts.begin() + 1, verts.end()}, len});
          return;
        }
        on_path[v] = 1;
        for (auto e : g.incident(v)) {
          const Edge& edge = g.edge(e);
          if (edge.is_loop()) continue;
          const auto w = edge.other(v);
          if (on_path[w]) continue;
          edges.push_back(e);
          if (w != t) verts.push_back(w);
          walk(w, len + edge.length);
          if (w != t) verts.pop_back();
          edges.pop_back();
        }
        on_path[v] = 0;
      };
      verts.push_back(s);
      walk(s, Rational(0));
      auto disjoint = [](const SimplePath& a, const SimplePath& b) {
        for (auto x : a.interior)
          for (auto y : b.interior)
            if (x == y) return false;
        for (auto x : a.edges)
          for (auto y : b.edges)
            if (x == y) return false;
        return true;
      };
      for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = i + 1; j < paths.size(); ++j) {
          if (!disjoint(paths[i], paths[j])) continue;
          for (std::size_t k = j + 1; k < paths.size(); ++k) {
            if (!disjoint(paths[i], paths[k]) || !disjoint(paths[j], paths[k])) continue;
            Rational total = paths[i].length + paths[j].length + paths[k].length;
            if (!best || total < *best) best = total;
          }
        }
    }
  return best;
}

/// max γ over weightings with every value a multiple of 1/den, Σω = 0 and
/// Σ|ω| = 1. den must be even.
inline Rational grid_gap(const FiniteMetric& m, long den) {
  const std::size_t n = m.size();
  const long half = den / 2;
  std::vector<long> k(n, 0);
  std::optional<Rational> best;
  std::function<void(std::size_t, long, long)> place = [&](std::size_t i, long pos_left, long neg_left) {
    if (i == n) {
      if (pos_left != 0 || neg_left != 0) return;
      Rational s(0);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
          if (k[a] != 0 && k[b] != 0) s += m(a, b) * (k[a] * k[b]);
      s /= den * den;
      if (!best || s > *best) best = s;
      return;
    }
    for (long v = -neg_left; v <= pos_left; ++v) {
      k[i] = v;
      place(i + 1, v > 0 ? pos_left - v : pos_left, v < 0 ? neg_left + v : neg_left);
    }
    k[i] = 0;
  };
  place(0, half, half);
  return *best;
}

/// Cut-cone membership for n <= 5 by trying every basis of cut columns and
/// checking the unique solution for nonnegativity.
inline bool l1_by_basis_enumeration(const FiniteMetric& m) {
  const std::size_t n = m.size();
  if (n <= 1) return true;
  if (n > 5) throw InputError("basis enumeration is limited to 5 points");
  std::vector<std::uint64_t> cuts;
  for (std::uint64_t k = 0; k + 1 < (std::uint64_t{1} << (n - 1)); ++k) cuts.push_back(1 | (k << 1));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const std::size_t rows = pairs.size();
  auto entry = [&](std::size_t r, std::uint64_t cut) {
    return ((cut >> pairs[r].first) & 1) != ((cut >> pairs[r].second) & 1) ? 1 : 0;
  };
  std::vector<std::size_t> pick;
  std::function<bool(std::size_t)> choose = [&](std::size_t from) -> bool {
    if (pick.size() == rows) {
      std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(rows + 1));
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < rows; ++c) a[r][c] = entry(r, cuts[pick[c]]);
        a[r][rows] = m(pairs[r].first, pairs[r].second);
      }
      for (std::size_t c = 0; c < rows; ++c) {
        std::size_t p = c;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) return false;
        std::swap(a[p], a[c]);
        for (std::size_t r = 0; r < rows; ++r) {
          if (r == c || a[r][c] == 0) continue;
          const Rational f = a[r][c] / a[c][c];
          for (std::size_t k = c; k <= rows; ++k) a[r][k] -= f * a[c][k];
        }
      }
      for (std::size_t c = 0; c < rows; ++c)
        if (a[c][rows] / a[c][c] < 0) return false;
      return true;
    }
    for (std::size_t i = from; i < cuts.size(); ++i) {
      pick.push_back(i);
      const bool ok = choose(i + 1);
      pick.pop_back();
      if (ok) return true;
    }
    return false;
  };
  return choose(0);
}

}  // namespace negtype::verify
