#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "negtype/analysis.hpp"
#include "negtype/distance.hpp"
#include "negtype/io.hpp"
#include "negtype/l1cut.hpp"
#include "negtype/theta.hpp"
#include "negtype/witness.hpp"

namespace negtype {

// Certificates are JSON objects with a "kind" field. Everything a verifier
// needs is in the file; verify_certificate() recomputes distances from the
// graph and redoes the arithmetic in exact rationals, never calling the
// search procedures that produced the certificate.

namespace detail {

inline Json pairwise_distances(const FiniteMetric& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      out.push_back({{"i", i}, {"j", j}, {"d", rational_to_json(m(i, j))}});
  return out;
}

}  // namespace detail

inline Json witness_certificate(const Witness& w) {
  std::vector<Point> six(w.blue.begin(), w.blue.end());
  six.insert(six.end(), w.red.begin(), w.red.end());
  const auto ww = omega_from_witness(w);
  Json omega = Json::array();
  for (const auto& [i, v] : ww.omega.entries())
    omega.push_back({{"point", point_to_json(ww.points[i])}, {"weight", rational_to_json(v)}});
  return {{"kind", "witness"},
          {"points", points_to_json(six)},
          {"blue", Json::array({0, 1, 2})},
          {"red", Json::array({3, 4, 5})},
          {"index", w.index},
          {"window_start", rational_to_json(w.window.start)},
          {"gap", rational_to_json(w.gap)},
          {"gamma", rational_to_json(gamma(ww.metric, ww.omega))},
          {"omega", std::move(omega)},
          {"distances", detail::pairwise_distances(w.six_metric)},
          {"shortcut_case", to_string(w.shortcut)}};
}

/// Rounded vertex witness from the subdivision pipeline, checked against
/// the subdivided graph.
inline Json subdivision_certificate(const SubdivisionWitness& s) {
  std::vector<Point> six;
  for (const auto& v : s.blue_vertices) six.push_back(Point::vertex(v));
  for (const auto& v : s.red_vertices) six.push_back(Point::vertex(v));
  return {{"kind", "vertex-witness"},
          {"k", s.k},
          {"points", points_to_json(six)},
          {"blue", Json::array({0, 1, 2})},
          {"red", Json::array({3, 4, 5})},
          {"continuous_gap", rational_to_json(s.continuous_gap)},
          {"gap", rational_to_json(s.vertex_gap)},
          {"distances", detail::pairwise_distances(s.vertex_metric)},
          {"sandwich_holds", s.sandwich_holds}};
}

inline Json psd_certificate_to_json(const PsdCertificate& c) {
  Json steps = Json::array();
  for (const auto& s : c.steps) {
    Json mult = Json::array();
    for (const auto& [i, l] : s.multipliers) mult.push_back({i, rational_to_json(l)});
    steps.push_back({{"pivot", s.pivot}, {"value", rational_to_json(s.value)}, {"multipliers", std::move(mult)}});
  }
  return steps;
}

inline PsdCertificate psd_certificate_from_json(const Json& j, std::size_t size) {
  PsdCertificate c;
  c.size = size;
  if (!j.is_array()) throw InputError("transcript must be an array");
  for (const auto& s : j) {
    EliminationStep step;
    step.pivot = detail::require(s, "pivot").get<std::size_t>();
    step.value = rational_from_json(detail::require(s, "value"));
    for (const auto& m : detail::require(s, "multipliers"))
      step.multipliers.emplace_back(m.at(0).get<std::size_t>(), rational_from_json(m.at(1)));
    for (const auto& [i, l] : step.multipliers)
      if (i >= size) throw InputError("transcript index out of range");
    if (step.pivot >= size) throw InputError("transcript index out of range");
    c.steps.push_back(std::move(step));
  }
  return c;
}

inline Json negtype_certificate(const std::vector<Point>& points, const FiniteMetric& m,
                                const NegativeTypeVerdict& v) {
  Json out{{"kind", "negtype"},
           {"points", points_to_json(points)},
           {"verdict", v.negative_type},
           {"basepoint", v.basepoint}};
  if (v.negative_type) {
    out["transcript"] = psd_certificate_to_json(v.transcript);
  } else {
    out["omega"] = weighting_to_json(v.violation, m.size());
    out["gamma"] = rational_to_json(v.violation_gamma);
  }
  out["distances"] = detail::pairwise_distances(m);
  return out;
}

inline Json l1_certificate(const std::vector<Point>& points, const FiniteMetric& m, const L1Result& r) {
  Json out{{"kind", "l1"}, {"points", points_to_json(points)}};
  if (const auto* dec = std::get_if<CutDecomposition>(&r)) {
    out["verdict"] = true;
    Json cuts = Json::array();
    for (const auto& t : dec->terms) {
      Json side = Json::array();
      for (auto i : t.cut.members()) side.push_back(m.labels[i]);
      cuts.push_back({{"cut", std::move(side)}, {"weight", rational_to_json(t.weight)}});
    }
    out["cuts"] = std::move(cuts);
  } else {
    const auto& f = std::get<FarkasCertificate>(r);
    out["verdict"] = false;
    Json y = Json::array();
    for (const auto& v : f.pair_weights) y.push_back(rational_to_json(v));
    out["pair_weights"] = std::move(y);
  }
  out["distances"] = detail::pairwise_distances(m);
  return out;
}

inline Json gap_certificate(const std::vector<Point>& points, const FiniteMetric& m, const GapBracket& b) {
  const bool spectral = b.upper == b.spectral_upper && b.spectral_upper != b.combinatorial_upper;
  Json out{{"kind", "gap"},
           {"points", points_to_json(points)},
           {"lower", rational_to_json(b.lower)},
           {"weighting", weighting_to_json(b.lower_weighting, m.size())},
           {"upper", rational_to_json(b.upper)},
           {"upper_source", spectral ? "spectral" : "diameter"},
           {"upper_float_derived", spectral},
           {"lower_approx", to_double(b.lower)},
           {"upper_approx", to_double(b.upper)}};
  if (spectral) out["mu"] = rational_to_json(b.upper * (b.upper >= 0 ? 1 : static_cast<long>(m.size())));
  out["distances"] = detail::pairwise_distances(m);
  return out;
}

inline Json theta_path_to_json(const ThetaPath& p) {
  Json edges = Json::array();
  for (const auto& e : p.edges) edges.push_back({{"edge", e.edge}, {"forward", e.forward}});
  return {{"edges", std::move(edges)}, {"vertices", p.vertices}, {"length", rational_to_json(p.length)}};
}

inline Json theta_certificate(const Theta& t) {
  Json paths = Json::array();
  for (const auto& p : t.paths) paths.push_back(theta_path_to_json(p));
  return {{"kind", "theta"}, {"u", t.u}, {"v", t.v}, {"paths", std::move(paths)}, {"total", rational_to_json(t.total)}};
}

inline Theta theta_from_json(const Json& j) {
  Theta t;
  t.u = detail::require_string(j, "u");
  t.v = detail::require_string(j, "v");
  const Json& paths = detail::require(j, "paths");
  if (!paths.is_array() || paths.size() != 3) throw InputError("a theta has three paths");
  for (std::size_t i = 0; i < 3; ++i) {
    ThetaPath& p = t.paths[i];
    for (const auto& e : detail::require(paths[i], "edges"))
      p.edges.push_back({detail::require_string(e, "edge"), detail::require(e, "forward").get<bool>()});
    for (const auto& v : detail::require(paths[i], "vertices")) p.vertices.push_back(v.get<std::string>());
    p.length = rational_from_json(detail::require(paths[i], "length"));
  }
  t.total = rational_from_json(detail::require(j, "total"));
  return t;
}

struct VerifyReport {
  std::string kind;
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

namespace detail {

inline Rational pair_sum(const FiniteMetric& m, const std::vector<Rational>& w) {
  Rational s(0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) s += w[i] * w[j] * m(i, j);
  return s;
}

inline void check_distances(const Json& cert, const FiniteMetric& m, VerifyReport& r) {
  if (!cert.contains("distances")) return;
  for (const auto& e : cert.at("distances")) {
    const auto i = require(e, "i").get<std::size_t>();
    const auto j = require(e, "j").get<std::size_t>();
    if (i >= m.size() || j >= m.size()) {
      r.problems.push_back("distance entry out of range");
      continue;
    }
    if (rational_from_json(require(e, "d")) != m(i, j))
      r.problems.push_back("recorded d(" + std::to_string(i) + "," + std::to_string(j) + ") is wrong");
  }
}

inline std::array<std::size_t, 3> triple(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != 3) throw InputError("expected three indices");
  std::array<std::size_t, 3> out{};
  for (std::size_t k = 0; k < 3; ++k) {
    out[k] = j[k].get<std::size_t>();
    if (out[k] >= n) throw InputError("index out of range");
  }
  return out;
}

inline void verify_six_point(const MetricGraph& g, const Json& cert, const FiniteMetric& m,
                             const Rational& threshold, bool strict, VerifyReport& r) {
  const auto blue = triple(require(cert, "blue"), m.size());
  const auto red = triple(require(cert, "red"), m.size());
  Rational within(0), across(0);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = a + 1; b < 3; ++b) within += m(blue[a], blue[b]) + m(red[a], red[b]);
  for (auto b : blue)
    for (auto c : red) across += m(b, c);
  const Rational value = within - across;
  if (value != rational_from_json(require(cert, "gap"))) r.problems.push_back("recorded gap is wrong");
  if (strict ? !(value > threshold) : !(value >= threshold))
    r.problems.push_back("gap " + to_string(value) + (strict ? " is not above " : " is below ") + to_string(threshold));
  if (!cert.contains("omega")) return;
  // ω accumulates -1/6 per blue and +1/6 per red occurrence.
  std::map<std::string, Rational> expected;
  for (auto b : blue) expected[m.labels[b]] -= frac(1, 6);
  for (auto c : red) expected[m.labels[c]] += frac(1, 6);
  std::map<std::string, Rational> recorded;
  for (const auto& e : require(cert, "omega"))
    recorded[to_string(canonical_point(g, point_from_json(require(e, "point"))))] +=
        rational_from_json(require(e, "weight"));
  std::erase_if(expected, [](const auto& kv) { return kv.second == 0; });
  if (recorded != expected) r.problems.push_back("omega does not match the ±1/6 multiset weighting");
  std::vector<std::size_t> idx;
  std::vector<Rational> w;
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto it = expected.find(m.labels[i]);
    if (it == expected.end()) continue;
    idx.push_back(i);
    w.push_back(it->second);
    expected.erase(it);
  }
  const Rational gam = pair_sum(m.restrict_to(idx), w);
  if (gam != value / 36) r.problems.push_back("gamma(omega) differs from gap/36");
  if (cert.contains("gamma") && rational_from_json(cert.at("gamma")) != gam)
    r.problems.push_back("recorded gamma is wrong");
}

}  // namespace detail

/// Re-checks a certificate against g. Throws InputError on malformed files.
inline VerifyReport verify_certificate(const Json& cert, const MetricGraph& g) {
  VerifyReport r;
  r.kind = detail::require_string(cert, "kind");
  if (r.kind == "theta") {
    const Theta t = theta_from_json(cert);
    if (auto defect = theta_defect(g, t); !defect.empty()) r.problems.push_back(defect);
    if (t.paths[0].length + t.paths[1].length + t.paths[2].length != t.total)
      r.problems.push_back("total is not the sum of the path lengths");
    return r;
  }

  const auto points = points_from_json(detail::require(cert, "points"));
  const FiniteMetric m = distance_matrix(g, points);
  detail::check_distances(cert, m, r);

  if (r.kind == "witness") {
    detail::verify_six_point(g, cert, m, frac(1, 12), false, r);
  } else if (r.kind == "vertex-witness") {
    for (const auto& p : points)
      if (!p.is_vertex()) r.problems.push_back("vertex witness contains a non-vertex point");
    detail::verify_six_point(g, cert, m, Rational(0), true, r);
  } else if (r.kind == "negtype") {
    const auto base = detail::require(cert, "basepoint").get<std::size_t>();
    if (base >= m.size()) throw InputError("basepoint out of range");
    if (detail::require(cert, "verdict").get<bool>()) {
      const RationalMatrix gram = basepoint_gram(m, base);
      const auto c = psd_certificate_from_json(detail::require(cert, "transcript"), gram.size());
      if (!c.certifies(gram)) r.problems.push_back("transcript does not reproduce the Gram matrix as a sum of squares");
    } else {
      const auto w = detail::require(cert, "omega");
      std::vector<Rational> dense;
      for (const auto& v : w) dense.push_back(rational_from_json(v));
      if (dense.size() != m.size()) throw InputError("omega has the wrong length");
      Rational sum(0), mass(0);
      for (const auto& v : dense) {
        sum += v;
        mass += abs(v);
      }
      const Rational gam = detail::pair_sum(m, dense);
      if (sum != 0) r.problems.push_back("omega does not sum to 0");
      if (mass != 1) r.problems.push_back("omega is not normalized");
      if (!(gam > 0)) r.problems.push_back("gamma(omega) is not positive");
      if (gam != rational_from_json(detail::require(cert, "gamma"))) r.problems.push_back("recorded gamma is wrong");
    }
  } else if (r.kind == "l1") {
    const std::size_t n = m.size();
    if (detail::require(cert, "verdict").get<bool>()) {
      std::map<std::string, std::size_t> index;
      for (std::size_t i = 0; i < n; ++i)
        if (!index.emplace(m.labels[i], i).second) throw InputError("l1 certificate points must be distinct");
      RationalMatrix sum(n);
      for (const auto& c : detail::require(cert, "cuts")) {
        const Rational w = rational_from_json(detail::require(c, "weight"));
        if (w < 0) r.problems.push_back("negative cut weight");
        std::vector<char> in(n, 0);
        for (const auto& l : detail::require(c, "cut")) {
          auto it = index.find(l.get<std::string>());
          if (it == index.end()) throw InputError("cut names an unknown point");
          in[it->second] = 1;
        }
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (in[i] != in[j]) sum(i, j) += w;
      }
      if (!(sum == m.dist)) r.problems.push_back("cut combination does not reproduce the metric");
    } else {
      FarkasCertificate f;
      f.points = n;
      for (const auto& v : detail::require(cert, "pair_weights")) f.pair_weights.push_back(rational_from_json(v));
      if (!f.certifies(m)) r.problems.push_back("pair weights do not separate the metric from the cut cone");
    }
  } else if (r.kind == "gap") {
    const std::size_t n = m.size();
    std::vector<Rational> w;
    for (const auto& v : detail::require(cert, "weighting")) w.push_back(rational_from_json(v));
    if (w.size() != n) throw InputError("weighting has the wrong length");
    Rational sum(0), mass(0);
    for (const auto& v : w) {
      sum += v;
      mass += abs(v);
    }
    if (sum != 0 || mass != 1) r.problems.push_back("weighting is not admissible");
    const Rational lower = rational_from_json(detail::require(cert, "lower"));
    const Rational upper = rational_from_json(detail::require(cert, "upper"));
    if (detail::pair_sum(m, w) != lower) r.problems.push_back("lower end is not gamma of the weighting");
    if (lower > upper) r.problems.push_back("bracket is inverted");
    if (detail::require_string(cert, "upper_source") == "diameter") {
      if (upper != m.max_distance() / 4) r.problems.push_back("upper end is not max d / 4");
    } else {
      // μ(I + J) + G must be a sum of squares; upper is μ or μ/n.
      const Rational mu = rational_from_json(detail::require(cert, "mu"));
      const Rational expected = mu >= 0 ? mu : Rational(mu / static_cast<long>(n));
      if (expected != upper) r.problems.push_back("upper end does not follow from mu");
      RationalMatrix a = basepoint_gram(m, n - 1);
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) a(i, j) += i == j ? Rational(2 * mu) : mu;
      if (!psd_eliminate(a).psd) r.problems.push_back("mu does not bound the form");
    }
  } else {
    throw InputError("unknown certificate kind '" + r.kind + "'");
  }
  return r;
}

}  // namespace negtype
