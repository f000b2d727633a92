#pragma once

// The reproduction suite: ten numbered checks shared by the acceptance test
// binary and the `check-paper` subcommand. Distances used to judge each
// check come from an injectable oracle so the suite can be shown to fail
// when the distance engine is corrupted.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "negtype/analysis.hpp"
#include "negtype/certificate.hpp"
#include "negtype/distance.hpp"
#include "negtype/families.hpp"
#include "negtype/l1cut.hpp"
#include "negtype/random.hpp"
#include "negtype/theta.hpp"
#include "negtype/transform.hpp"
#include "negtype/verify/brute_force.hpp"
#include "negtype/witness.hpp"

namespace negtype::verify {

using MetricOracle = std::function<FiniteMetric(const MetricGraph&, std::span<const Point>)>;

inline FiniteMetric exact_oracle(const MetricGraph& g, std::span<const Point> points) {
  return distance_matrix(g, points);
}

/// Adds 1/100 to every off-diagonal distance.
inline FiniteMetric corrupted_oracle(const MetricGraph& g, std::span<const Point> points) {
  FiniteMetric m = distance_matrix(g, points);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (i != j) m.dist(i, j) += frac(1, 100);
  return m;
}

struct CheckInfo {
  int id;
  std::string title;
};

struct CheckResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

inline const std::vector<CheckInfo>& check_list() {
  static const std::vector<CheckInfo> list{
      {1, "unit theta witness has gap exactly 1/12"},
      {2, "witness gap >= 1/12 on 100 random theta-containing graphs"},
      {3, "gamma of the witness weighting is gap/36 >= 1/432"},
      {4, "gap bracket upper end <= 1 on unit theta samples"},
      {5, "explicit cut decomposition of the 2-subdivided K4"},
      {6, "180-subdivision of K2,3: continuous and rounded gaps"},
      {7, "theta-free samples are of negative type and l1-embeddable"},
      {8, "distance, minimal theta and gap bracket agree with oracles"},
      {9, "witness identities, index rule, case formula, branch lemma"},
      {10, "implication chain l1 => negative type => one positive eigenvalue"},
  };
  return list;
}

namespace detail {

inline std::vector<Point> random_points(const MetricGraph& g, std::size_t count, std::mt19937_64& rng) {
  std::vector<Point> out;
  for (std::size_t k = 0; k < count; ++k) {
    if (negtype::detail::uniform_below(rng, 4) == 0) {
      out.push_back(Point::vertex(g.vertex_id(negtype::detail::uniform_below(rng, g.vertex_count()))));
      continue;
    }
    const Edge& e = g.edge(negtype::detail::uniform_below(rng, g.edge_count()));
    const auto j = static_cast<long>(negtype::detail::uniform_below(rng, 13));
    out.push_back(canonical_point(g, Point::on_edge(e.id, e.length * frac(j, 12))));
  }
  return out;
}

}  // namespace detail

class CheckSuite {
 public:
  explicit CheckSuite(MetricOracle oracle = exact_oracle) : oracle_(std::move(oracle)) {}

  CheckResult run(int id) {
    CheckResult r;
    r.id = id;
    for (const auto& c : check_list())
      if (c.id == id) r.title = c.title;
    if (r.title.empty()) throw InputError("no check numbered " + std::to_string(id));
    const auto start = std::chrono::steady_clock::now();
    std::ostringstream detail;
    try {
      r.passed = dispatch(id, detail);
    } catch (const std::exception& e) {
      r.passed = false;
      detail << "exception: " << e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.detail = detail.str();
    return r;
  }

  std::vector<CheckResult> run_all() {
    std::vector<CheckResult> out;
    for (const auto& c : check_list()) out.push_back(run(c.id));
    return out;
  }

 private:
  struct RandomWitness {
    std::uint64_t seed;
    MetricGraph graph;
    Witness witness;
  };

  MetricOracle oracle_;
  std::optional<std::vector<RandomWitness>> random_witnesses_;
  std::optional<K4Decomposition> k4_;
  std::optional<SubdivisionWitness> sub_;
  std::vector<FiniteMetric> theta_free_metrics_;
  bool theta_free_done_ = false;

  FiniteMetric metric(const MetricGraph& g, std::span<const Point> points) const { return oracle_(g, points); }

  static std::vector<Point> six_points(const Witness& w) {
    std::vector<Point> six(w.blue.begin(), w.blue.end());
    six.insert(six.end(), w.red.begin(), w.red.end());
    return six;
  }

  static Rational six_gap(const FiniteMetric& m) {
    const std::array<std::size_t, 3> b{0, 1, 2}, r{3, 4, 5};
    return gap(m, b, r);
  }

  const std::vector<RandomWitness>& random_witnesses() {
    if (random_witnesses_) return *random_witnesses_;
    std::vector<RandomWitness> out;
    for (std::uint64_t seed = 1; out.size() < 100; ++seed) {
      std::mt19937_64 rng(negtype::detail::mix_seed(seed));
      const std::size_t n = 2 + negtype::detail::uniform_below(rng, 7);
      const std::size_t lo = n - 1, hi = 12;
      const std::size_t m = lo + negtype::detail::uniform_below(rng, hi - lo + 1);
      auto g = make_random_connected(n, m, seed, Rational(1));
      if (!find_theta(g)) continue;
      auto w = construct_witness(g);
      out.push_back({seed, std::move(g), std::move(w)});
    }
    random_witnesses_ = std::move(out);
    return *random_witnesses_;
  }

  const K4Decomposition& k4() {
    if (!k4_) k4_ = k4_explicit_decomposition();
    return *k4_;
  }

  const SubdivisionWitness& sub() {
    if (!sub_) sub_ = subdivision_witness(make_complete_bipartite(2, 3), 180);
    return *sub_;
  }

  std::vector<std::pair<MetricGraph, std::vector<Point>>> theta_free_samples() const {
    std::vector<std::pair<MetricGraph, std::vector<Point>>> out;
    for (std::uint64_t s = 0; s < 50; ++s) {
      std::mt19937_64 rng(negtype::detail::mix_seed(1000 + s));
      const std::size_t n = 2 + negtype::detail::uniform_below(rng, 6);
      MetricGraph g = [&] {
        switch (s % 4) {
          case 0: return make_random_connected(n, n - 1, s, Rational(1));
          case 1: return make_cycle(n);
          case 2: return make_random_connected(n, n, s, frac(1, 2));
          default: return make_random_cactus(1 + n, s, Rational(1));
        }
      }();
      const std::size_t count = 2 + negtype::detail::uniform_below(rng, 7);
      auto pts = detail::random_points(g, count, rng);
      out.emplace_back(std::move(g), std::move(pts));
    }
    return out;
  }

  bool dispatch(int id, std::ostringstream& detail) {
    switch (id) {
      case 1: return check_unit_theta(detail);
      case 2: return check_random_witnesses(detail);
      case 3: return check_corollary_constant(detail);
      case 4: return check_upper_remark(detail);
      case 5: return check_k4(detail);
      case 6: return check_subdivision(detail);
      case 7: return check_theta_free(detail);
      case 8: return check_oracles(detail);
      case 9: return check_lemmas(detail);
      case 10: return check_chain_oracle(detail);
    }
    return false;
  }

  bool check_unit_theta(std::ostringstream& detail) {
    const auto start = std::chrono::steady_clock::now();
    const MetricGraph g = make_theta(1, 1, 1);
    const Witness w = construct_witness(g);
    const auto six = six_points(w);
    const Rational value = six_gap(metric(g, six));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = value == frac(1, 12) && w.gap == value;
    std::vector<std::string> blue;
    for (const auto& p : w.blue) blue.push_back(to_string(p));
    ok = ok && blue == std::vector<std::string>{"u", "v", "v"};
    // Each red point sits 1/12 from u (on P1) or from v (on P2, P3).
    const std::vector<Point> anchors{Point::vertex("u"), Point::vertex("v"), Point::vertex("v")};
    for (std::size_t k = 0; k < 3; ++k) {
      const std::vector<Point> pair{w.red[k], anchors[k]};
      ok = ok && !w.red[k].is_vertex() && metric(g, pair)(0, 1) == frac(1, 12);
    }
    ok = ok && secs < 1.0;
    detail << "gap " << to_string(value) << ", B = {" << blue[0] << "," << blue[1] << "," << blue[2] << "}, R = {"
           << to_string(w.red[0]) << "," << to_string(w.red[1]) << "," << to_string(w.red[2]) << "}, " << secs
           << " s";
    return ok;
  }

  bool check_random_witnesses(std::ostringstream& detail) {
    const auto start = std::chrono::steady_clock::now();
    const auto& ws = random_witnesses();
    Rational worst;
    std::size_t bad = 0;
    for (const auto& rw : ws) {
      const auto six = six_points(rw.witness);
      const Rational value = six_gap(metric(rw.graph, six));
      if (value < frac(1, 12) || value != rw.witness.gap) ++bad;
      if (&rw == &ws.front() || value < worst) worst = value;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    detail << ws.size() << " graphs, smallest gap " << to_string(worst) << ", " << bad << " failures, " << secs
           << " s";
    return ws.size() == 100 && bad == 0 && secs < 60.0;
  }

  bool check_corollary_constant(std::ostringstream& detail) {
    std::size_t bad = 0;
    Rational worst;
    bool first = true;
    for (const auto& rw : random_witnesses()) {
      const auto ww = omega_from_witness(rw.witness);
      const Rational gam = gamma(metric(rw.graph, ww.points), ww.omega);
      if (gam != rw.witness.gap / 36 || gam < frac(1, 432)) ++bad;
      if (first || gam < worst) worst = gam;
      first = false;
    }
    detail << "smallest gamma " << to_string(worst) << ", " << bad << " failures";
    return bad == 0;
  }

  bool check_upper_remark(std::ostringstream& detail) {
    const MetricGraph g = make_theta(1, 1, 1);
    std::vector<std::vector<Point>> samples{six_points(construct_witness(g))};
    std::mt19937_64 rng(negtype::detail::mix_seed(404));
    for (int s = 0; s < 10; ++s) samples.push_back(detail::random_points(g, 3 + negtype::detail::uniform_below(rng, 6), rng));
    double worst = -1e300;
    bool ok = true;
    for (const auto& pts : samples) {
      const FiniteMetric m = metric(g, pts);
      GapOptions o;
      o.seed = 4;
      const GapBracket b = gap_bracket(m, o);
      worst = std::max(worst, to_double(b.upper));
      ok = ok && to_double(b.upper) <= 1.0 + 1e-6 && b.lower <= b.upper;
    }
    detail << samples.size() << " samples, largest upper end " << worst;
    return ok;
  }

  bool check_k4(std::ostringstream& detail) {
    const auto start = std::chrono::steady_clock::now();
    const auto& dec = k4();
    std::vector<Point> vertices;
    for (const auto& v : dec.graph.vertices()) vertices.push_back(Point::vertex(v));
    const FiniteMetric m = metric(dec.graph, vertices);
    const std::size_t n = m.size();
    // Σ over the twelve sets of d_S must be 2d on every pair.
    std::size_t pairs = 0, bad = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        std::size_t crossing = 0;
        for (const auto& s : dec.sets) {
          const bool a = std::find(s.begin(), s.end(), i) != s.end();
          const bool b = std::find(s.begin(), s.end(), j) != s.end();
          crossing += a != b;
        }
        ++pairs;
        if (Rational(static_cast<long>(crossing)) != 2 * m(i, j)) ++bad;
      }
    L1Options o;
    o.max_points = n;
    const auto r = is_l1_embeddable(m, o);
    const auto* lp = std::get_if<CutDecomposition>(&r);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    detail << dec.sets.size() << " sets, " << pairs << " pairs, " << bad << " mismatches, LP "
           << (lp ? "feasible with " + std::to_string(lp->terms.size()) + " cuts" : std::string("infeasible")) << ", "
           << secs << " s";
    return dec.sets.size() == 12 && pairs == 120 && bad == 0 && lp && lp->reproduces(m) && secs < 120.0;
  }

  bool check_subdivision(std::ostringstream& detail) {
    const auto start = std::chrono::steady_clock::now();
    const auto& s = sub();
    std::vector<Point> six;
    for (const auto& v : s.blue_vertices) six.push_back(Point::vertex(v));
    for (const auto& v : s.red_vertices) six.push_back(Point::vertex(v));
    const FiniteMetric m = metric(s.graph, six);
    const Rational vgap = six_gap(m);
    const auto verdict = is_negative_type(m);
    bool cert_ok = false;
    if (!verdict.negative_type) {
      cert_ok = verify_certificate(negtype_certificate(six, m, verdict), s.graph).ok() &&
                gamma(m, verdict.violation) > 0 && verdict.violation.sum() == 0;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    detail << s.graph.vertex_count() << " vertices, continuous gap " << to_string(s.continuous_gap)
           << ", vertex gap " << to_string(vgap) << ", negtype " << (verdict.negative_type ? "TRUE" : "FALSE")
           << ", " << secs << " s";
    return s.continuous_gap >= frac(181, 12) && vgap > 0 && vgap == s.vertex_gap && s.sandwich_holds &&
           !verdict.negative_type && cert_ok && secs < 60.0;
  }

  bool check_theta_free(std::ostringstream& detail) {
    std::size_t bad = 0, count = 0;
    theta_free_metrics_.clear();
    for (const auto& [g, pts] : theta_free_samples()) {
      ++count;
      if (find_theta(g)) {
        ++bad;
        continue;
      }
      const FiniteMetric m = distinct_points(metric(g, pts));
      theta_free_metrics_.push_back(m);
      const bool nt = is_negative_type(m).negative_type;
      const bool l1 = std::holds_alternative<CutDecomposition>(is_l1_embeddable(m));
      if (!nt || !l1) ++bad;
    }
    theta_free_done_ = true;
    detail << count << " samples, " << bad << " failures";
    return count == 50 && bad == 0;
  }

  bool check_oracles(std::ostringstream& detail) {
    std::mt19937_64 rng(negtype::detail::mix_seed(808));
    // Distances against route enumeration.
    std::size_t dist_pairs = 0, dist_bad = 0;
    for (std::uint64_t s = 0; dist_pairs < 200; ++s) {
      const std::size_t n = 2 + negtype::detail::uniform_below(rng, 5);
      const auto g = make_random_connected(n, n - 1 + negtype::detail::uniform_below(rng, 4), 5000 + s, frac(1, 3),
                                           negtype::detail::uniform_below(rng, 3) == 0);
      const auto vd = route_vertex_distances(g);
      const auto pts = detail::random_points(g, 6, rng);
      const FiniteMetric m = metric(g, pts);
      for (std::size_t i = 0; i < pts.size() && dist_pairs < 200; ++i)
        for (std::size_t j = i + 1; j < pts.size() && dist_pairs < 200; ++j, ++dist_pairs)
          if (m(i, j) != route_distance(g, pts[i], pts[j], vd)) ++dist_bad;
    }
    // Minimal theta against exhaustive enumeration.
    std::size_t theta_bad = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
      const std::size_t n = 2 + negtype::detail::uniform_below(rng, 4);
      const auto g = make_random_connected(n, n - 1 + negtype::detail::uniform_below(rng, 5), 7000 + s, Rational(1));
      const auto expected = brute_force_min_theta_total(g);
      const auto found = find_theta(g) ? std::optional<Rational>(minimal_theta(g).total) : std::nullopt;
      if (expected != found) ++theta_bad;
    }
    // Gap bracket against the grid.
    std::size_t grid_bad = 0;
    for (std::uint64_t s = 0; s < 20; ++s) {
      const auto g = make_random_connected(4, 6, 9000 + s, Rational(1));
      const auto pts = detail::random_points(g, 4, rng);
      const FiniteMetric m = metric(g, pts);
      const Rational grid = grid_gap(m, 24);
      GapOptions o;
      o.seed = s;
      const GapBracket b = gap_bracket(m, o);
      const double slack = 1e-6 * to_double(m.max_distance());
      if (grid > b.upper || to_double(b.lower) < to_double(grid) - slack) ++grid_bad;
    }
    detail << dist_pairs << " distance pairs (" << dist_bad << " bad), 100 theta graphs (" << theta_bad
           << " bad), 20 grid metrics (" << grid_bad << " bad)";
    return dist_bad == 0 && theta_bad == 0 && grid_bad == 0;
  }

  bool check_lemmas(std::ostringstream& detail) {
    std::size_t eq1 = 0, eq2 = 0, cases = 0, branch = 0, lemma = 0;
    const Rational twelfth = frac(1, 12), sixth = frac(1, 6);
    for (const auto& rw : random_witnesses()) {
      const Witness& w = rw.witness;
      const FiniteMetric d = metric(rw.graph, w.nine);
      constexpr std::size_t X = 0, Y = 3, Z = 6;
      for (std::size_t i = 0; i < 2; ++i) {
        if (d(X + i, Y + i) != d(X + i, Y + i + 1) + twelfth) ++eq1;
        if (d(X + i, Z + i) != d(X + i, Z + i + 1) + twelfth) ++eq1;
      }
      const std::size_t i = static_cast<std::size_t>(w.index - 1);
      if (d(Y + i, Z + i) + d(Y + i + 1, Z + i + 1) < d(Y + i, Z + i + 1) + d(Y + i + 1, Z + i)) ++eq2;
      const Rational low = std::min({d(Y, Z), d(Y, Z + 2), d(Y + 2, Z), d(Y + 2, Z + 2)});
      if (d(Y + 1, Z + 1) != sixth + low) ++cases;
      // Constructed x_j sit within 1/2 of u, so ambient and theta distances agree.
      const std::array<const std::array<ThetaPoint, 3>*, 3> rows{&w.x, &w.y, &w.z};
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t r = 0; r < 3; ++r)
          for (std::size_t b = 0; b < 3; ++b)
            if (d(X + a, 3 * r + b) != theta_distance(w.theta, w.x[a], (*rows[r])[b])) ++branch;
      const auto report =
          check_branch_distance_lemma(rw.graph, w.theta, sample_lemma_pairs(w.theta, 20, rw.seed));
      if (!report.passed() || report.checked != 20) ++lemma;
    }
    detail << "violations: identities " << eq1 << ", index rule " << eq2 << ", case formula " << cases
           << ", branch distances " << branch << ", lemma samples " << lemma;
    return eq1 == 0 && eq2 == 0 && cases == 0 && branch == 0 && lemma == 0;
  }

  bool check_chain_oracle(std::ostringstream& detail) {
    std::vector<FiniteMetric> metrics;
    for (const auto& rw : random_witnesses()) metrics.push_back(metric(rw.graph, six_points(rw.witness)));
    {
      const auto& dec = k4();
      std::vector<Point> vertices;
      for (const auto& v : dec.graph.vertices()) vertices.push_back(Point::vertex(v));
      metrics.push_back(metric(dec.graph, vertices));
    }
    {
      const auto& s = sub();
      std::vector<Point> six;
      for (const auto& v : s.blue_vertices) six.push_back(Point::vertex(v));
      for (const auto& v : s.red_vertices) six.push_back(Point::vertex(v));
      metrics.push_back(metric(s.graph, six));
      metrics.push_back(s.continuous_metric);
    }
    if (!theta_free_done_) {
      for (const auto& [g, pts] : theta_free_samples()) theta_free_metrics_.push_back(metric(g, pts));
      theta_free_done_ = true;
    }
    metrics.insert(metrics.end(), theta_free_metrics_.begin(), theta_free_metrics_.end());
    std::size_t violations = 0, l1_checked = 0;
    L1Options o;
    o.max_points = 16;
    for (const auto& m : metrics) {
      const auto r = check_chain(m, o);
      violations += r.violations.size();
      l1_checked += r.l1_embeddable.has_value();
    }
    detail << metrics.size() << " metrics (" << l1_checked << " with an l1 verdict), " << violations
           << " violations";
    return violations == 0;
  }
};

inline std::string format_result(const CheckResult& r) {
  std::ostringstream out;
  out << "criterion " << r.id << ": " << (r.passed ? "PASS" : "FAIL") << "  " << r.title << "  [" << r.detail << "]";
  return out.str();
}

}  // namespace negtype::verify
