#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "negtype/error.hpp"
#include "negtype/finite_metric.hpp"
#include "negtype/l1cut.hpp"
#include "negtype/random.hpp"

namespace negtype {

/// Σ over unordered pairs of distinct support points of ω(x)ω(y)d(x,y).
inline Rational gamma(const FiniteMetric& m, const Weighting& w) {
  for (const auto& [i, v] : w.entries())
    if (i >= m.size()) throw InputError("weighting support outside the metric");
  Rational s(0);
  const auto& e = w.entries();
  for (auto a = e.begin(); a != e.end(); ++a)
    for (auto b = std::next(a); b != e.end(); ++b) s += a->second * b->second * m(a->first, b->first);
  return s;
}

/// G(j,k) = (d(j,base) + d(k,base) - d(j,k)) / 2 over the points other than
/// `base`, in increasing index order.
inline RationalMatrix basepoint_gram(const FiniteMetric& m, std::size_t base) {
  const std::size_t n = m.size();
  if (base >= n) throw InputError("basepoint out of range");
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i)
    if (i != base) idx.push_back(i);
  RationalMatrix g(idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b)
      g(a, b) = (m(idx[a], base) + m(idx[b], base) - m(idx[a], idx[b])) / 2;
  return g;
}

/// One step of symmetric elimination: the form gains value·(x_pivot +
/// Σ multiplier_i x_i)² and the pivot leaves the active set.
struct EliminationStep {
  std::size_t pivot = 0;
  Rational value;
  std::vector<std::pair<std::size_t, Rational>> multipliers;
};

/// Sum-of-squares certificate A = Σ value_k v_k v_kᵀ with every value > 0.
struct PsdCertificate {
  std::size_t size = 0;
  std::vector<EliminationStep> steps;

  RationalMatrix reconstruct() const {
    RationalMatrix a(size);
    for (const auto& s : steps) {
      std::vector<std::pair<std::size_t, Rational>> v{{s.pivot, Rational(1)}};
      v.insert(v.end(), s.multipliers.begin(), s.multipliers.end());
      for (const auto& [i, vi] : v)
        for (const auto& [j, vj] : v) a(i, j) += s.value * vi * vj;
    }
    return a;
  }

  bool certifies(const RationalMatrix& a) const {
    if (a.size() != size) return false;
    for (const auto& s : steps)
      if (s.value <= 0) return false;
    return reconstruct() == a;
  }
};

struct PsdResult {
  bool psd = false;
  PsdCertificate certificate;    // when psd
  std::vector<Rational> witness;  // xᵀAx < 0, when not psd
};

/// Exact positive-semidefiniteness test by symmetric Gaussian elimination
/// with full diagonal pivoting (largest remaining diagonal first).
inline PsdResult psd_eliminate(RationalMatrix a) {
  const std::size_t n = a.size();
  PsdResult out;
  out.certificate.size = n;
  std::vector<char> active(n, 1);
  std::vector<Rational> y(n, Rational(0));
  bool violated = false;
  for (std::size_t remaining = n; remaining > 0; --remaining) {
    std::optional<std::size_t> p;
    for (std::size_t i = 0; i < n; ++i)
      if (active[i] && (!p || a(i, i) > a(*p, *p))) p = i;
    if (a(*p, *p) < 0) {
      y[*p] = 1;
      violated = true;
      break;
    }
    if (a(*p, *p) == 0) {
      for (std::size_t i = 0; i < n && !violated; ++i)
        for (std::size_t j = i + 1; j < n && !violated; ++j)
          if (active[i] && active[j] && a(i, j) != 0) {
            y[i] = 1;
            y[j] = a(i, j) > 0 ? -1 : 1;
            violated = true;
          }
      break;
    }
    EliminationStep step;
    step.pivot = *p;
    step.value = a(*p, *p);
    active[*p] = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (active[i] && a(i, *p) != 0) step.multipliers.emplace_back(i, a(i, *p) / step.value);
    for (const auto& [i, li] : step.multipliers)
      for (const auto& [j, lj] : step.multipliers) a(i, j) -= li * lj * step.value;
    out.certificate.steps.push_back(std::move(step));
  }
  if (!violated) {
    out.psd = true;
    return out;
  }
  // Undo the eliminations so that xᵀAx equals yᵀSy on the Schur complement.
  for (auto it = out.certificate.steps.rbegin(); it != out.certificate.steps.rend(); ++it) {
    Rational s(0);
    for (const auto& [i, l] : it->multipliers) s += l * y[i];
    y[it->pivot] = -s;
  }
  out.witness = std::move(y);
  return out;
}

inline Rational quadratic_form(const RationalMatrix& a, const std::vector<Rational>& x) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (x[i] != 0 && x[j] != 0) s += x[i] * a(i, j) * x[j];
  return s;
}

struct NegativeTypeVerdict {
  bool negative_type = false;
  std::size_t basepoint = 0;
  /// Certificate for the basepoint Gram matrix (Gram indices skip the
  /// basepoint), present when negative_type.
  PsdCertificate transcript;
  /// Σω = 0, Σ|ω| = 1 and γ(ω) > 0, present when not negative_type.
  Weighting violation;
  Rational violation_gamma;
};

/// Exact test of γ(ω) <= 0 for all ω with Σω = 0: positive
/// semidefiniteness of the basepoint Gram matrix, since γ(ω) = -ω'ᵀGω'
/// where ω' drops the basepoint coordinate.
inline NegativeTypeVerdict is_negative_type(const FiniteMetric& m,
                                            std::optional<std::size_t> basepoint = std::nullopt) {
  const std::size_t n = m.size();
  if (n == 0) throw InputError("empty metric");
  NegativeTypeVerdict v;
  v.basepoint = basepoint.value_or(n - 1);
  auto r = psd_eliminate(basepoint_gram(m, v.basepoint));
  if (r.psd) {
    v.negative_type = true;
    v.transcript = std::move(r.certificate);
    return v;
  }
  std::vector<Rational> omega(n, Rational(0));
  Rational sum(0);
  for (std::size_t i = 0, k = 0; i < n; ++i) {
    if (i == v.basepoint) continue;
    omega[i] = r.witness[k++];
    sum += omega[i];
  }
  omega[v.basepoint] = -sum;
  Rational mass(0);
  for (const auto& w : omega) mass += abs(w);
  for (auto& w : omega) w /= mass;
  v.violation = Weighting::from_dense(omega);
  v.violation_gamma = gamma(m, v.violation);
  if (v.violation_gamma <= 0 || v.violation.sum() != 0)
    throw InternalError("negative-type violation certificate failed");
  return v;
}

struct GapOptions {
  std::size_t starts = 64;
  std::size_t iters = 400;
  std::uint64_t seed = 0;
  /// Up to this many points, every sign pattern (modulo ω -> -ω) is also
  /// used as a start, from the barycenter of its face.
  std::size_t all_faces_up_to = 12;
  /// Up to this many points, the lower end is exact: every stationary
  /// point of every face is solved for in rational arithmetic.
  std::size_t exact_up_to = 8;
  /// Extra starting weightings, e.g. the ±1/6 witness weighting.
  std::vector<Weighting> seeds;
};

/// lower <= Γ(m) <= upper, where Γ is the sup of γ over Σω = 0, Σ|ω| = 1.
struct GapBracket {
  Rational lower;
  Weighting lower_weighting;
  Rational upper;
  Rational spectral_upper;
  Rational combinatorial_upper;
};

namespace detail {

inline Eigen::MatrixXd to_eigen(const FiniteMetric& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXd d(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) d(i, j) = to_double(m(i, j));
  return d;
}

/// Euclidean projection onto {x >= 0, Σx = radius}.
inline Eigen::VectorXd project_simplex(const Eigen::VectorXd& v, double radius) {
  std::vector<double> u(v.data(), v.data() + v.size());
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumulative = 0, theta = 0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    cumulative += u[k];
    const double t = (cumulative - radius) / static_cast<double>(k + 1);
    if (u[k] - t > 0) theta = t;
  }
  return (v.array() - theta).max(0.0).matrix();
}

/// Rounds to multiples of 1e-12, then rescales positive and negative parts
/// to ±1/2 exactly. Returns nullopt if a part vanishes.
inline std::optional<Weighting> rationalize(const Eigen::VectorXd& w) {
  const mpz_class scale("1000000000000");
  std::vector<Rational> v(static_cast<std::size_t>(w.size()));
  Rational pos(0), neg(0);
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    const double scaled = std::round(w[i] * 1e12);
    Rational r(mpz_class(mpf_class(scaled)), scale);
    r.canonicalize();
    v[static_cast<std::size_t>(i)] = r;
    if (r > 0) pos += r;
    if (r < 0) neg -= r;
  }
  if (pos == 0 || neg == 0) return std::nullopt;
  for (auto& r : v) r = r > 0 ? Rational(r / pos / 2) : Rational(r / neg / 2);
  return Weighting::from_dense(v);
}

/// Projected gradient ascent of ½ωᵀDω over the face fixed by the sign
/// pattern of `start`: positive part in ½Δ(P), negative part in ½Δ(N).
inline Eigen::VectorXd face_ascent(const Eigen::MatrixXd& d, Eigen::VectorXd start, std::size_t iters) {
  const Eigen::Index n = start.size();
  std::vector<Eigen::Index> pos, neg;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (start[i] > 0) pos.push_back(i);
    if (start[i] < 0) neg.push_back(i);
  }
  if (pos.empty() || neg.empty()) return start;
  Eigen::VectorXd p(static_cast<Eigen::Index>(pos.size())), q(static_cast<Eigen::Index>(neg.size()));
  for (std::size_t k = 0; k < pos.size(); ++k) p[static_cast<Eigen::Index>(k)] = start[pos[k]];
  for (std::size_t k = 0; k < neg.size(); ++k) q[static_cast<Eigen::Index>(k)] = -start[neg[k]];
  p = project_simplex(p, 0.5);
  q = project_simplex(q, 0.5);
  auto assemble = [&] {
    Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
    for (std::size_t k = 0; k < pos.size(); ++k) w[pos[k]] = p[static_cast<Eigen::Index>(k)];
    for (std::size_t k = 0; k < neg.size(); ++k) w[neg[k]] = -q[static_cast<Eigen::Index>(k)];
    return w;
  };
  const double lipschitz = std::max(d.norm(), 1e-300);
  const double step = 1.0 / lipschitz;
  Eigen::VectorXd w = assemble();
  Eigen::VectorXd best = w;
  double best_f = 0.5 * w.dot(d * w);
  for (std::size_t it = 0; it < iters; ++it) {
    const Eigen::VectorXd g = d * w;
    for (std::size_t k = 0; k < pos.size(); ++k) p[static_cast<Eigen::Index>(k)] += step * g[pos[k]];
    for (std::size_t k = 0; k < neg.size(); ++k) q[static_cast<Eigen::Index>(k)] -= step * g[neg[k]];
    p = project_simplex(p, 0.5);
    q = project_simplex(q, 0.5);
    w = assemble();
    const double f = 0.5 * w.dot(d * w);
    if (f > best_f) {
      best_f = f;
      best = w;
    }
  }
  return best;
}

/// Unique solution of a square system, or nullopt if singular.
inline std::optional<std::vector<Rational>> solve_unique(std::vector<std::vector<Rational>> a,
                                                         std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t c = 0; c < n; ++c) b[c] /= a[c][c];
  return b;
}

/// Isolated stationary points of ½ωᵀDω on the relative interiors of all
/// faces {ω > 0 on P, ω < 0 on N, Σ_P ω = 1/2, Σ_N ω = -1/2}. The maximum
/// over the polytope is attained at one of them: a non-isolated stationary
/// set carries a constant value and reaches a smaller face.
inline std::vector<Weighting> face_stationary_points(const FiniteMetric& m) {
  const std::size_t n = m.size();
  std::vector<Weighting> out;
  std::vector<std::uint8_t> side(n, 0);  // 0 off, 1 positive, 2 negative
  const std::size_t total = static_cast<std::size_t>(std::pow(3.0, static_cast<double>(n)));
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < n; ++i, c /= 3) {
      side[i] = static_cast<std::uint8_t>(c % 3);
      if (side[i]) support.push_back(i);
    }
    if (support.size() < 2 || side[support.front()] != 1) continue;
    if (std::none_of(support.begin(), support.end(), [&](auto i) { return side[i] == 2; })) continue;
    // Unknowns: ω on the support, then the multipliers for P and N.
    const std::size_t k = support.size();
    std::vector<std::vector<Rational>> a(k + 2, std::vector<Rational>(k + 2, Rational(0)));
    std::vector<Rational> b(k + 2, Rational(0));
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t j = 0; j < k; ++j) a[r][j] = m(support[r], support[j]);
      a[r][side[support[r]] == 1 ? k : k + 1] = -1;
    }
    for (std::size_t j = 0; j < k; ++j) a[side[support[j]] == 1 ? k : k + 1][j] = 1;
    b[k] = frac(1, 2);
    b[k + 1] = frac(-1, 2);
    auto sol = solve_unique(std::move(a), std::move(b));
    if (!sol) continue;
    bool feasible = true;
    for (std::size_t j = 0; j < k && feasible; ++j)
      feasible = side[support[j]] == 1 ? (*sol)[j] > 0 : (*sol)[j] < 0;
    if (!feasible) continue;
    Weighting w;
    for (std::size_t j = 0; j < k; ++j) w.add(support[j], (*sol)[j]);
    out.push_back(std::move(w));
  }
  return out;
}

inline bool lexicographically_less(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Rational& x, const Rational& y) { return x < y; });
}

/// Smallest certified μ (up to the float estimate plus a margin) with
/// ½ωᵀDω <= μ·|ω|² on the sum-zero subspace, checked exactly as
/// positive semidefiniteness of μ(I + J) + G.
inline std::optional<Rational> certified_spectral_ratio(const FiniteMetric& m) {
  const std::size_t n = m.size();
  const Eigen::MatrixXd d = to_eigen(m);
  // Helmert basis of the sum-zero subspace.
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n - 1));
  for (std::size_t k = 1; k < n; ++k) {
    const double norm = std::sqrt(static_cast<double>(k * (k + 1)));
    for (std::size_t i = 0; i < k; ++i) v(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k - 1)) = 1.0 / norm;
    v(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k - 1)) = -static_cast<double>(k) / norm;
  }
  const Eigen::MatrixXd b = 0.5 * v.transpose() * d * v;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b, Eigen::EigenvaluesOnly);
  const double estimate = solver.eigenvalues().maxCoeff();

  const RationalMatrix g = basepoint_gram(m, n - 1);
  double margin = 1e-10 * (1.0 + std::abs(estimate) + to_double(m.max_distance()));
  for (int attempt = 0; attempt < 80; ++attempt, margin *= 2) {
    const Rational mu(estimate + margin);
    RationalMatrix a = g;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) a(i, j) += i == j ? Rational(2 * mu) : mu;
    if (psd_eliminate(std::move(a)).psd) return mu;
  }
  return std::nullopt;
}

}  // namespace detail

/// Brackets the negative type gap Γ(m) for n >= 2.
///
/// The lower end is the best exact γ over the polytope vertices
/// (e_j - e_k)/2, the supplied seeds, and multi-start projected ascent runs
/// (rounded and renormalized to rationals). The upper end is the smaller of
/// a certified spectral bound and max d / 4.
inline GapBracket gap_bracket(const FiniteMetric& m, const GapOptions& options = {}) {
  const std::size_t n = m.size();
  if (n < 2) throw InputError("gap bracket needs at least two points");
  const Eigen::MatrixXd d = detail::to_eigen(m);

  std::optional<Rational> best;
  std::vector<Rational> best_dense;
  Weighting best_w;
  auto consider = [&](const Weighting& w) {
    if (w.sum() != 0 || w.abs_sum() != 1) return;
    Rational g = gamma(m, w);
    auto dense = w.dense(n);
    if (!best || g > *best || (g == *best && detail::lexicographically_less(dense, best_dense))) {
      best = std::move(g);
      best_dense = std::move(dense);
      best_w = w;
    }
  };
  auto ascend = [&](const Eigen::VectorXd& start) {
    if (auto w = detail::rationalize(detail::face_ascent(d, start, options.iters))) consider(*w);
  };

  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      Weighting w;
      w.add(j, frac(1, 2));
      w.add(k, frac(-1, 2));
      consider(w);
    }
  for (const auto& seed : options.seeds) {
    Eigen::VectorXd start = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    for (const auto& [i, v] : seed.entries()) {
      if (i >= n) throw InputError("seed weighting outside the metric");
      start[static_cast<Eigen::Index>(i)] = to_double(v);
    }
    if (auto w = detail::rationalize(start)) consider(*w);
    consider(seed);
    ascend(start);
  }
  if (n <= options.exact_up_to)
    for (const auto& w : detail::face_stationary_points(m)) consider(w);
  if (n <= options.all_faces_up_to) {
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << (n - 1)) * 2; mask += 2) {
      Eigen::VectorXd start(static_cast<Eigen::Index>(n));
      for (std::size_t i = 0; i < n; ++i) start[static_cast<Eigen::Index>(i)] = (mask >> i) & 1 ? 1.0 : -1.0;
      ascend(start);
    }
  }
  for (std::size_t s = 0; s < options.starts; ++s) {
    std::mt19937_64 rng(detail::mix_seed(options.seed * 0x100000001b3ULL + s));
    Eigen::VectorXd start(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < start.size(); ++i) {
      const auto sign = detail::uniform_below(rng, 3);
      const double mag = 0.05 + detail::uniform_unit(rng);
      start[i] = sign == 0 ? mag : sign == 1 ? -mag : 0.0;
    }
    // Force both signs: a random positive slot and a different negative one.
    if ((start.array() > 0).count() == 0 || (start.array() < 0).count() == 0) {
      const auto p = detail::uniform_below(rng, n);
      const auto q = (p + 1 + detail::uniform_below(rng, n - 1)) % n;
      start[static_cast<Eigen::Index>(p)] = 1.0;
      start[static_cast<Eigen::Index>(q)] = -1.0;
    }
    ascend(start);
  }

  GapBracket out;
  out.lower = *best;
  out.lower_weighting = best_w;
  out.combinatorial_upper = m.max_distance() / 4;
  out.upper = out.combinatorial_upper;
  if (auto mu = detail::certified_spectral_ratio(m)) {
    out.spectral_upper = *mu >= 0 ? *mu : Rational(*mu / static_cast<unsigned long>(n));
    if (out.spectral_upper < out.upper) out.upper = out.spectral_upper;
  } else {
    out.spectral_upper = out.combinatorial_upper;
  }
  if (out.lower > out.upper) throw InternalError("gap bracket is inverted");
  return out;
}

/// Coordinates in R^(n-1) whose Euclidean distances are √d. Requires
/// negative type (exact check).
inline std::vector<std::vector<double>> sqrt_embedding(const FiniteMetric& m) {
  const std::size_t n = m.size();
  if (n == 0) throw InputError("empty metric");
  if (!is_negative_type(m).negative_type) throw PreconditionError("metric is not of negative type");
  std::vector<std::vector<double>> coords(n, std::vector<double>(n - 1, 0.0));
  if (n == 1) return coords;
  const RationalMatrix g = basepoint_gram(m, n - 1);
  const auto k = static_cast<Eigen::Index>(n - 1);
  Eigen::MatrixXd gd(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j)
      gd(i, j) = to_double(g(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gd);
  const Eigen::MatrixXd x =
      solver.eigenvectors() * solver.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal();
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) coords[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = x(i, j);
  return coords;  // the basepoint (last) sits at the origin
}

/// Eigenvalues of the distance matrix above 1e-9 times the largest
/// magnitude. Floating point; a diagnostic only.
inline std::size_t positive_eigenvalue_count(const FiniteMetric& m) {
  if (m.size() == 0) return 0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(detail::to_eigen(m), Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  const double tau = 1e-9 * ev.cwiseAbs().maxCoeff();
  return static_cast<std::size_t>((ev.array() > tau).count());
}

/// Merges points at distance 0.
inline FiniteMetric distinct_points(const FiniteMetric& m) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < m.size(); ++i) {
    bool dup = false;
    for (auto k : keep)
      if (m(i, k) == 0) dup = true;
    if (!dup) keep.push_back(i);
  }
  return m.restrict_to(keep);
}

struct ChainReport {
  std::size_t points = 0;                     // after merging coincident points
  std::optional<bool> l1_embeddable;          // (ii); nullopt if over the size cap
  bool negative_type = false;                 // (iii)
  std::optional<std::size_t> positive_eigenvalues;  // (v), for n >= 2
  std::vector<std::string> violations;

  bool consistent() const { return violations.empty(); }
};

/// Evaluates l1-embeddability, negative type and the positive eigenvalue
/// count, and reports any break in (ii) ⇒ (iii) ⇒ (v).
inline ChainReport check_chain(const FiniteMetric& metric, const L1Options& l1 = {}) {
  const FiniteMetric m = distinct_points(metric);
  ChainReport r;
  r.points = m.size();
  if (m.size() <= l1.max_points)
    r.l1_embeddable = std::holds_alternative<CutDecomposition>(is_l1_embeddable(m, l1));
  r.negative_type = is_negative_type(m).negative_type;
  if (m.size() >= 2) r.positive_eigenvalues = positive_eigenvalue_count(m);
  if (r.l1_embeddable.value_or(false) && !r.negative_type)
    r.violations.push_back("l1-embeddable but not of negative type");
  if (r.negative_type && r.positive_eigenvalues && *r.positive_eigenvalues != 1)
    r.violations.push_back("negative type but " + std::to_string(*r.positive_eigenvalues) +
                           " positive eigenvalues");
  return r;
}

}  // namespace negtype
