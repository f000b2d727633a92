#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "negtype/distance.hpp"
#include "negtype/finite_metric.hpp"
#include "negtype/theta.hpp"
#include "negtype/transform.hpp"

namespace negtype {

/// Point diametrically opposite x on the cycle formed by paths a and b
/// (0-based). The walk of half the circumference starts towards u, so for
/// x near u on the shortest path the image lands on path b.
inline ThetaPoint opposite_point(const Theta& t, std::size_t a, std::size_t b, const ThetaPoint& x) {
  if (a > 2 || b > 2 || a == b) throw InputError("opposite_point needs two distinct paths");
  check_theta_point(t, x);
  if (x.path != a && !is_branch_u(x) && !is_branch_v(t, x))
    throw InputError("point is not on the requested path");
  const Rational& la = t.paths[a].length;
  const Rational& lb = t.paths[b].length;
  const Rational circumference = la + lb;
  // Cycle coordinate: path a from u to v on [0, la], then path b back to u.
  Rational pos = is_branch_v(t, x) ? la : x.arclength;
  if (is_branch_u(x)) pos = 0;
  Rational target = pos + circumference / 2;
  if (target >= circumference) target -= circumference;
  if (target <= la) return {a, target};
  return {b, Rational(circumference - target)};
}

/// J1 = [start, start + 1/6] along the shortest path from u, with its
/// images on the other two paths.
struct Window {
  Rational start;
  std::pair<Rational, Rational> j2;  // arclength range on path 1 (0-based)
  std::pair<Rational, Rational> j3;  // arclength range on path 2
};

namespace detail {

/// Arclengths (from u) of the graph vertices along a theta path.
inline std::vector<Rational> vertex_marks(const MetricGraph& g, const ThetaPath& path) {
  std::vector<Rational> marks{Rational(0)};
  Rational at(0);
  for (const auto& step : path.edges) {
    at += g.edge(g.edge_at(step.edge)).length;
    marks.push_back(at);
  }
  return marks;
}

inline bool open_interval_clear(const std::vector<Rational>& marks, const Rational& lo,
                                const Rational& hi) {
  for (const auto& m : marks)
    if (lo < m && m < hi) return false;
  return true;
}

inline void require_witness_preconditions(const MetricGraph& g) {
  if (g.edge_count() == 0 || g.min_edge_length() < 1)
    throw PreconditionError("witness construction needs every edge length >= 1");
}

}  // namespace detail

/// Every window start in {0, 1/6, 1/3} whose images on paths 2 and 3 have
/// no graph vertex in their interiors, in scan order.
inline std::vector<Window> qualifying_windows(const MetricGraph& g, const Theta& t) {
  detail::require_witness_preconditions(g);
  const auto marks2 = detail::vertex_marks(g, t.paths[1]);
  const auto marks3 = detail::vertex_marks(g, t.paths[2]);
  std::vector<Window> out;
  for (long k = 0; k < 3; ++k) {
    Window w;
    w.start = frac(k, 6);
    const Rational end = w.start + frac(1, 6);
    // Images are read as arclengths on paths 2 and 3; the only point that
    // may come back labelled on path 1 is v itself.
    auto arclength_on = [&](const ThetaPoint& p, std::size_t path) -> Rational {
      if (is_branch_v(t, p)) return t.paths[path].length;
      if (p.path != path) throw InternalError("window image left its path");
      return p.arclength;
    };
    w.j2 = {arclength_on(opposite_point(t, 0, 1, {0, end}), 1),
            arclength_on(opposite_point(t, 0, 1, {0, w.start}), 1)};
    w.j3 = {arclength_on(opposite_point(t, 0, 2, {0, end}), 2),
            arclength_on(opposite_point(t, 0, 2, {0, w.start}), 2)};
    if (detail::open_interval_clear(marks2, w.j2.first, w.j2.second) &&
        detail::open_interval_clear(marks3, w.j3.first, w.j3.second))
      out.push_back(std::move(w));
  }
  return out;
}

/// First qualifying window; at least one always exists.
inline Window choose_window(const MetricGraph& g, const Theta& t) {
  auto ws = qualifying_windows(g, t);
  if (ws.empty()) throw InternalError("no window with vertex-free images");
  return ws.front();
}

/// Which term realises the minimum in d(y2,z2) = 1/6 + min(...).
enum class ShortcutCase { y1z1, y3z3, y1z3, y3z1, none };

inline const char* to_string(ShortcutCase c) {
  switch (c) {
    case ShortcutCase::y1z1: return "y1z1";
    case ShortcutCase::y3z3: return "y3z3";
    case ShortcutCase::y1z3: return "y1z3";
    case ShortcutCase::y3z1: return "y3z1";
    case ShortcutCase::none: return "none";
  }
  return "none";
}

/// Six points refuting negative type, built from a minimal theta.
struct Witness {
  Theta theta;
  Window window;
  std::array<ThetaPoint, 3> x, y, z;
  /// Graph points in the order x1 x2 x3 y1 y2 y3 z1 z2 z3.
  std::vector<Point> nine;
  FiniteMetric nine_metric;
  int index = 1;  // i in {1, 2}
  std::array<Point, 3> blue;  // B = {x_i, y_i, z_i}
  std::array<Point, 3> red;   // R = {x_{i+1}, y_{i+1}, z_{i+1}}
  /// Distances among B then R (indices 0-2 are B, 3-5 are R).
  FiniteMetric six_metric;
  Rational gap;
  ShortcutCase shortcut = ShortcutCase::none;
};

/// Σ within R + Σ within B − Σ across, over unordered pairs of the two
/// index multisets.
inline Rational gap(const FiniteMetric& m, std::span<const std::size_t> blue,
                    std::span<const std::size_t> red) {
  if (blue.size() != 3 || red.size() != 3) throw InputError("gap needs two 3-point multisets");
  for (auto i : blue)
    if (i >= m.size()) throw InputError("gap index out of range");
  for (auto i : red)
    if (i >= m.size()) throw InputError("gap index out of range");
  Rational within(0), across(0);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = a + 1; b < 3; ++b) {
      within += m(blue[a], blue[b]);
      within += m(red[a], red[b]);
    }
  for (auto b : blue)
    for (auto r : red) across += m(b, r);
  return within - across;
}

/// Runs the six-point construction on g (all edges >= 1, theta-containing).
inline Witness construct_witness(const MetricGraph& g) {
  detail::require_witness_preconditions(g);
  if (!find_theta(g)) throw PreconditionError("graph is theta-free");
  const Theta t = minimal_theta(g);
  const auto windows = qualifying_windows(g, t);
  if (windows.empty()) throw InternalError("no window with vertex-free images");

  for (const auto& w : windows) {
    Witness wit;
    wit.theta = t;
    wit.window = w;
    for (long k = 0; k < 3; ++k) {
      wit.x[k] = {0, w.start + frac(k, 12)};
      wit.y[k] = opposite_point(t, 0, 1, wit.x[k]);
      wit.z[k] = opposite_point(t, 0, 2, wit.x[k]);
    }
    for (const auto* row : {&wit.x, &wit.y, &wit.z})
      for (const auto& tp : *row) wit.nine.push_back(to_point(g, t, tp));
    wit.nine_metric = distance_matrix(g, wit.nine);
    const auto& d = wit.nine_metric;
    constexpr std::size_t X = 0, Y = 3, Z = 6;

    std::optional<int> chosen;
    for (int i = 0; i < 2 && !chosen; ++i)
      if (d(Y + i, Z + i) + d(Y + i + 1, Z + i + 1) >= d(Y + i, Z + i + 1) + d(Y + i + 1, Z + i))
        chosen = i;
    if (!chosen) continue;
    const std::size_t i = static_cast<std::size_t>(*chosen);
    wit.index = *chosen + 1;
    const std::array<std::size_t, 6> six{X + i, Y + i, Z + i, X + i + 1, Y + i + 1, Z + i + 1};
    for (std::size_t k = 0; k < 3; ++k) {
      wit.blue[k] = wit.nine[six[k]];
      wit.red[k] = wit.nine[six[k + 3]];
    }
    wit.six_metric = d.restrict_to({six.begin(), six.end()});
    const std::array<std::size_t, 3> b{0, 1, 2}, r{3, 4, 5};
    wit.gap = gap(wit.six_metric, b, r);

    const Rational sixth(1, 6);
    const Rational& y2z2 = d(Y + 1, Z + 1);
    if (y2z2 == sixth + d(Y, Z)) wit.shortcut = ShortcutCase::y1z1;
    else if (y2z2 == sixth + d(Y + 2, Z + 2)) wit.shortcut = ShortcutCase::y3z3;
    else if (y2z2 == sixth + d(Y, Z + 2)) wit.shortcut = ShortcutCase::y1z3;
    else if (y2z2 == sixth + d(Y + 2, Z)) wit.shortcut = ShortcutCase::y3z1;

    if (wit.gap >= frac(1, 12)) return wit;
  }
  throw InternalError("no window produced a gap of at least 1/12");
}

/// ±1/6 weighting on the distinct points of a witness.
struct WitnessWeighting {
  std::vector<Point> points;
  FiniteMetric metric;
  Weighting omega;
};

/// -1/6 on each B point, +1/6 on each R point; coincident points accumulate.
inline WitnessWeighting omega_from_witness(const Witness& w) {
  WitnessWeighting out;
  std::vector<std::size_t> index_of(6);
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < 6; ++k) {
    const Point& p = k < 3 ? w.blue[k] : w.red[k - 3];
    std::size_t found = out.points.size();
    for (std::size_t q = 0; q < out.points.size(); ++q)
      if (out.points[q] == p) found = q;
    if (found == out.points.size()) {
      out.points.push_back(p);
      keep.push_back(k);
    }
    index_of[k] = found;
    out.omega.add(found, k < 3 ? frac(-1, 6) : frac(1, 6));
  }
  out.metric = w.six_metric.restrict_to(keep);
  return out;
}

/// Nearest vertex of each point, ties to the edge's first endpoint. Throws
/// PreconditionError if some point is farther than 1/2 from every vertex.
inline std::vector<std::string> round_to_vertices(const MetricGraph& g, std::span<const Point> points) {
  std::vector<std::string> out;
  for (const auto& raw : points) {
    const Point p = canonical_point(g, raw);
    if (p.is_vertex()) {
      out.push_back(p.id());
      continue;
    }
    const Edge& e = g.edge(g.edge_at(p.id()));
    const Rational to_tail = distance(g, p, Point::vertex(g.vertex_id(e.tail)));
    const Rational to_head = distance(g, p, Point::vertex(g.vertex_id(e.head)));
    const bool tail = to_tail <= to_head;
    if ((tail ? to_tail : to_head) > frac(1, 2))
      throw PreconditionError("point " + to_string(p) + " is farther than 1/2 from every vertex");
    out.push_back(g.vertex_id(tail ? e.tail : e.head));
  }
  return out;
}

struct SubdivisionWitness {
  MetricGraph graph;  // subdivide(g0, k)
  std::size_t k = 0;
  Witness base;       // witness on g0 itself
  std::array<Point, 3> blue, red;
  Rational continuous_gap;
  std::array<std::string, 3> blue_vertices, red_vertices;
  FiniteMetric continuous_metric;  // B then R
  FiniteMetric vertex_metric;      // rounded B then R
  Rational vertex_gap;
  bool sandwich_holds = false;
};

/// Six vertices of the k-subdivision of a unit graph g0 with positive gap.
///
/// The subdivided graph is, as a metric space, g0 scaled by k+1 with every
/// segment of length >= k+1. The construction runs on g0 (segments >= 1)
/// and its points are carried over, scaling the gap by k+1. Rounding each
/// point to a vertex moves it by at most 1/2, so each of the 15 distances
/// moves by at most 1 and the gap stays above (k+1)/12 - 15 > 0.
inline SubdivisionWitness subdivision_witness(const MetricGraph& g0, std::size_t k) {
  if (k < 180) throw PreconditionError("subdivision witness is certified only for k >= 180");
  for (const auto& e : g0.edges())
    if (e.length != 1) throw PreconditionError("subdivision witness needs a unit-length graph");
  if (!find_theta(g0)) throw PreconditionError("graph is theta-free");

  SubdivisionWitness out;
  out.graph = subdivide(g0, k);
  out.k = k;
  out.base = construct_witness(g0);
  std::vector<Point> six;
  for (std::size_t j = 0; j < 3; ++j) {
    out.blue[j] = subdivision_point(g0, out.graph, k, out.base.blue[j]);
    out.red[j] = subdivision_point(g0, out.graph, k, out.base.red[j]);
  }
  six.assign(out.blue.begin(), out.blue.end());
  six.insert(six.end(), out.red.begin(), out.red.end());
  out.continuous_metric = distance_matrix(out.graph, six);
  const std::array<std::size_t, 3> b{0, 1, 2}, r{3, 4, 5};
  out.continuous_gap = gap(out.continuous_metric, b, r);
  if (out.continuous_gap != out.base.gap * static_cast<unsigned long>(k + 1))
    throw InternalError("subdivided gap does not scale with k+1");

  const auto rounded = round_to_vertices(out.graph, six);
  std::vector<Point> vertex_points;
  for (std::size_t j = 0; j < 6; ++j) {
    (j < 3 ? out.blue_vertices[j] : out.red_vertices[j - 3]) = rounded[j];
    vertex_points.push_back(Point::vertex(rounded[j]));
  }
  out.vertex_metric = distance_matrix(out.graph, vertex_points);
  out.vertex_gap = gap(out.vertex_metric, b, r);
  out.sandwich_holds = true;
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t c = a + 1; c < 6; ++c) {
      const Rational& cont = out.continuous_metric(a, c);
      const Rational& vert = out.vertex_metric(a, c);
      if (!(vert + 1 >= cont && cont >= vert - 1)) out.sandwich_holds = false;
    }
  if (out.vertex_gap <= 0) throw InternalError("rounded subdivision gap is not positive");
  return out;
}

}  // namespace negtype
