#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "negtype/distance.hpp"
#include "negtype/error.hpp"
#include "negtype/families.hpp"
#include "negtype/finite_metric.hpp"
#include "negtype/transform.hpp"

namespace negtype {

/// A bipartition {S, complement} of n points, stored as the side that
/// contains point 0. Both sides are nonempty.
class Cut {
 public:
  Cut() = default;

  /// Canonicalizes any proper nonempty subset given as a bit mask.
  static Cut from_mask(std::uint64_t mask, std::size_t n) {
    if (n < 2 || n > 63) throw InputError("cuts need 2 <= n <= 63 points");
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    mask &= full;
    if (mask == 0 || mask == full) throw InputError("cut side must be proper and nonempty");
    if (!(mask & 1)) mask = full & ~mask;
    Cut c;
    c.mask_ = mask;
    c.n_ = n;
    return c;
  }

  static Cut from_members(const std::vector<std::size_t>& members, std::size_t n) {
    std::uint64_t mask = 0;
    for (auto i : members) {
      if (i >= n) throw InputError("cut member out of range");
      mask |= std::uint64_t{1} << i;
    }
    return from_mask(mask, n);
  }

  std::uint64_t mask() const { return mask_; }
  std::size_t points() const { return n_; }
  bool contains(std::size_t i) const { return (mask_ >> i) & 1; }
  bool separates(std::size_t i, std::size_t j) const { return contains(i) != contains(j); }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  friend bool operator==(const Cut&, const Cut&) = default;
  friend bool operator<(const Cut& a, const Cut& b) { return a.mask_ < b.mask_; }

 private:
  std::uint64_t mask_ = 1;
  std::size_t n_ = 0;
};

/// d_S as a matrix: 1 across the cut, 0 within a side.
inline RationalMatrix cut_metric(std::size_t n, const Cut& s) {
  if (s.points() != n) throw InputError("cut is over a different point count");
  if (!s.contains(0)) throw InputError("cut is not canonical");
  RationalMatrix d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d(i, j) = s.separates(i, j) ? 1 : 0;
  return d;
}

struct CutTerm {
  Cut cut;
  Rational weight;
};

/// Positive combination of cut metrics.
struct CutDecomposition {
  std::size_t points = 0;
  std::vector<CutTerm> terms;

  RationalMatrix evaluate() const {
    RationalMatrix d(points);
    for (const auto& t : terms)
      for (std::size_t i = 0; i < points; ++i)
        for (std::size_t j = 0; j < points; ++j)
          if (t.cut.separates(i, j)) d(i, j) += t.weight;
    return d;
  }

  /// True when all weights are positive and the sum reproduces m exactly.
  bool reproduces(const FiniteMetric& m) const {
    if (m.size() != points) return false;
    for (const auto& t : terms)
      if (t.weight <= 0) return false;
    return evaluate() == m.dist;
  }
};

/// Index of the unordered pair {i, j}, i < j, in lexicographic order.
inline std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// Pair weights f with Σ f·d_S <= 0 for every cut and Σ f·d > 0: proof that
/// d is not a nonnegative combination of cut metrics.
struct FarkasCertificate {
  std::size_t points = 0;
  std::vector<Rational> pair_weights;  // indexed by pair_index

  Rational against(const FiniteMetric& m) const {
    Rational s(0);
    for (std::size_t i = 0; i < points; ++i)
      for (std::size_t j = i + 1; j < points; ++j) s += pair_weights[pair_index(points, i, j)] * m(i, j);
    return s;
  }

  /// Largest Σ f·d_S over all cuts, by exhaustive enumeration.
  Rational max_over_cuts() const {
    Rational best;
    bool first = true;
    const std::uint64_t count = std::uint64_t{1} << (points - 1);
    for (std::uint64_t k = 0; k + 1 < count; ++k) {
      const std::uint64_t mask = 1 | (k << 1);
      Rational s(0);
      for (std::size_t i = 0; i < points; ++i)
        for (std::size_t j = i + 1; j < points; ++j)
          if (((mask >> i) & 1) != ((mask >> j) & 1)) s += pair_weights[pair_index(points, i, j)];
      if (first || s > best) best = s;
      first = false;
    }
    return best;
  }

  bool certifies(const FiniteMetric& m) const {
    if (m.size() != points || points < 2) return false;
    if (pair_weights.size() != points * (points - 1) / 2) return false;
    return against(m) > 0 && max_over_cuts() <= 0;
  }
};

struct L1Options {
  std::size_t max_points = 14;
};

using L1Result = std::variant<CutDecomposition, FarkasCertificate>;

namespace detail {

/// Phase-one revised simplex on {λ >= 0 : Σ λ_S d_S = d}, exact. Columns
/// are the canonical cuts in Gray-code order followed by one artificial
/// per pair. Entering columns are chosen by floating-point steepest edge
/// and confirmed exactly, falling back to exact Dantzig pricing; a long run
/// of degenerate pivots switches to Bland's least-index rule until the
/// basic solution moves again. Ratio-test ties go to the least basic index.
class CutConeLp {
 public:
  explicit CutConeLp(const FiniteMetric& m) : n_(m.size()), rows_(n_ * (n_ - 1) / 2) {
    cuts_ = (std::uint64_t{1} << (n_ - 1)) - 1;
    b_.resize(rows_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) b_[pair_index(n_, i, j)] = m(i, j);
    binv_.assign(rows_, std::vector<Rational>(rows_, Rational(0)));
    for (std::size_t r = 0; r < rows_; ++r) {
      binv_[r][r] = 1;
      basic_.push_back(cuts_ + r);
    }
    x_ = b_;
  }

  L1Result solve() {
    while (true) {
      Rational objective(0);
      for (std::size_t r = 0; r < rows_; ++r)
        if (is_artificial(basic_[r])) objective += x_[r];
      if (objective == 0) return decomposition();
      const auto y = duals();
      auto entering = bland_ ? std::nullopt : price_approx(y);
      if (!entering) entering = price(y);
      if (!entering) return FarkasCertificate{n_, y};
      const bool moved = pivot(*entering);
      ++pivots_;
      degenerate_run_ = moved ? 0 : degenerate_run_ + 1;
      if (moved) bland_ = false;
      if (degenerate_run_ > 50 * rows_) bland_ = true;
    }
  }

  /// Pivots the given cuts into the basis with the usual ratio test, so
  /// the basic solution stays nonnegative; the reduced cost is ignored.
  void crash(const std::vector<std::uint64_t>& masks) {
    for (const auto mask : masks) {
      const std::uint64_t var = column_of(mask);
      if (std::find(basic_.begin(), basic_.end(), var) != basic_.end()) continue;
      pivot(Entering{var, mask});
      ++pivots_;
    }
  }

  std::size_t pivots() const { return pivots_; }

 private:
  bool is_artificial(std::uint64_t var) const { return var >= cuts_; }

  static std::uint64_t gray(std::uint64_t k) { return k ^ (k >> 1); }

  static std::uint64_t gray_rank(std::uint64_t g) {
    std::uint64_t k = 0;
    for (; g; g >>= 1) k ^= g;
    return k;
  }

  /// Position of a canonical cut mask in the walk_cuts order.
  std::uint64_t column_of(std::uint64_t mask) const {
    const std::uint64_t k = gray_rank(mask >> 1);
    const std::uint64_t skipped = gray_rank((std::uint64_t{1} << (n_ - 1)) - 1);
    return skipped < k ? k - 1 : k;
  }

  /// Gray-code walk over canonical cut masks, skipping the full set.
  template <typename Value, typename Visit>
  void walk_cuts(const std::vector<Value>& y, Visit&& visit) const {
    const std::uint64_t all = (std::uint64_t{1} << (n_ - 1)) - 1;
    std::uint64_t mask = 1;
    Value crossing(0);
    for (std::size_t j = 1; j < n_; ++j) crossing += y[pair_index(n_, 0, j)];
    std::uint64_t column = 0;
    for (std::uint64_t k = 0;; ++k) {
      if (gray(k) != all) {
        if (visit(column, mask, crossing)) return;
        ++column;
      }
      if (k + 1 == (std::uint64_t{1} << (n_ - 1))) return;
      const auto t = static_cast<std::size_t>(std::countr_zero(k + 1)) + 1;
      mask ^= std::uint64_t{1} << t;
      const bool t_in = (mask >> t) & 1;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i == t) continue;
        const bool now_crossing = t_in != static_cast<bool>((mask >> i) & 1);
        if (now_crossing)
          crossing += y[pair_index(n_, t, i)];
        else
          crossing -= y[pair_index(n_, t, i)];
      }
    }
  }

  std::vector<Rational> duals() const {
    std::vector<Rational> y(rows_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r)
      if (is_artificial(basic_[r]))
        for (std::size_t k = 0; k < rows_; ++k) y[k] += binv_[r][k];
    return y;
  }

  struct Entering {
    std::uint64_t var;
    std::uint64_t mask;  // cut columns only
  };

  /// Exact pricing: the most improving column (least index on ties), or the
  /// least-index improving column in Bland mode.
  std::optional<Entering> price(const std::vector<Rational>& y) const {
    std::optional<Entering> found;
    Rational best;
    walk_cuts(y, [&](std::uint64_t column, std::uint64_t mask, const Rational& crossing) {
      if (crossing > 0 && (!found || crossing > best)) {
        found = Entering{column, mask};
        best = crossing;
        return bland_;
      }
      return false;
    });
    for (std::size_t r = 0; r < rows_ && !(found && bland_); ++r) {
      const Rational gain = y[r] - 1;
      if (gain > 0 && (!found || gain > best)) {
        found = Entering{cuts_ + r, 0};
        best = gain;
      }
    }
    return found;
  }

  Rational exact_crossing(std::uint64_t mask, const std::vector<Rational>& y) const {
    Rational s(0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (((mask >> i) & 1) != ((mask >> j) & 1)) s += y[pair_index(n_, i, j)];
    return s;
  }

  /// Steepest-edge choice made in floating point and confirmed exactly:
  /// the largest gain²/(1 + |B⁻¹a|²), with B⁻¹a carried along the Gray-code
  /// walk. Empty when nothing clears the tolerance, in which case exact
  /// pricing decides.
  std::optional<Entering> price_approx(const std::vector<Rational>& y) const {
    const auto rows = static_cast<Eigen::Index>(rows_);
    Eigen::VectorXd yd(rows);
    Eigen::MatrixXd bd(rows, rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
      yd(r) = y[static_cast<std::size_t>(r)].get_d();
      for (Eigen::Index k = 0; k < rows; ++k)
        bd(r, k) = binv_[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)].get_d();
    }
    const double tol = 1e-9 * std::max(1.0, yd.cwiseAbs().maxCoeff()) * static_cast<double>(n_ * n_);
    std::optional<Entering> found;
    double best = 0;
    auto consider = [&](double gain, double norm2, const Entering& e) {
      if (gain <= tol) return;
      const double score = gain * gain / (1 + norm2);
      if (score > best) {
        best = score;
        found = e;
      }
    };

    const std::uint64_t all = (std::uint64_t{1} << (n_ - 1)) - 1;
    std::uint64_t mask = 1, column = 0;
    double crossing = 0;
    Eigen::VectorXd v = Eigen::VectorXd::Zero(rows);
    for (std::size_t j = 1; j < n_; ++j) {
      const auto p = static_cast<Eigen::Index>(pair_index(n_, 0, j));
      crossing += yd(p);
      v += bd.col(p);
    }
    for (std::uint64_t k = 0;; ++k) {
      if (gray(k) != all) {
        consider(crossing, v.squaredNorm(), Entering{column, mask});
        ++column;
      }
      if (k + 1 == (std::uint64_t{1} << (n_ - 1))) break;
      const auto t = static_cast<std::size_t>(std::countr_zero(k + 1)) + 1;
      mask ^= std::uint64_t{1} << t;
      const bool t_in = (mask >> t) & 1;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i == t) continue;
        const auto p = static_cast<Eigen::Index>(pair_index(n_, t, i));
        if (t_in != static_cast<bool>((mask >> i) & 1)) {
          crossing += yd(p);
          v += bd.col(p);
        } else {
          crossing -= yd(p);
          v -= bd.col(p);
        }
      }
    }
    for (Eigen::Index r = 0; r < rows; ++r) consider(yd(r) - 1, bd.col(r).squaredNorm(), Entering{cuts_ + static_cast<std::uint64_t>(r), 0});
    if (!found) return std::nullopt;
    const bool improving =
        is_artificial(found->var) ? y[found->var - cuts_] > 1 : exact_crossing(found->mask, y) > 0;
    return improving ? found : std::nullopt;
  }

  /// Returns false for a degenerate (zero-step) pivot.
  bool pivot(const Entering& in) {
    std::vector<Rational> d(rows_, Rational(0));
    if (is_artificial(in.var)) {
      const auto k = in.var - cuts_;
      for (std::size_t r = 0; r < rows_; ++r) d[r] = binv_[r][k];
    } else {
      std::vector<std::size_t> crossing;
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
          if (((in.mask >> i) & 1) != ((in.mask >> j) & 1)) crossing.push_back(pair_index(n_, i, j));
      for (std::size_t r = 0; r < rows_; ++r)
        for (auto k : crossing) d[r] += binv_[r][k];
    }
    std::optional<std::size_t> leave;
    Rational best;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (d[r] <= 0) continue;
      Rational ratio = x_[r] / d[r];
      if (!leave || ratio < best || (ratio == best && basic_[r] < basic_[*leave])) {
        leave = r;
        best = std::move(ratio);
      }
    }
    if (!leave) throw InternalError("phase-one LP reported unbounded");
    const std::size_t r = *leave;
    const Rational piv = d[r];
    for (auto& v : binv_[r]) v /= piv;
    x_[r] /= piv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || d[i] == 0) continue;
      const Rational f = d[i];
      for (std::size_t k = 0; k < rows_; ++k)
        if (binv_[r][k] != 0) binv_[i][k] -= f * binv_[r][k];
      x_[i] -= f * x_[r];
    }
    basic_[r] = in.var;
    masks_[in.var] = in.mask;
    return best != 0;
  }

  CutDecomposition decomposition() const {
    CutDecomposition dec;
    dec.points = n_;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (is_artificial(basic_[r]) || x_[r] == 0) continue;
      dec.terms.push_back({Cut::from_mask(masks_.at(basic_[r]), n_), x_[r]});
    }
    std::sort(dec.terms.begin(), dec.terms.end(),
              [](const CutTerm& a, const CutTerm& b) { return a.cut < b.cut; });
    return dec;
  }

  std::size_t n_;
  std::size_t rows_;
  std::uint64_t cuts_ = 0;
  std::vector<Rational> b_;
  std::vector<Rational> x_;
  std::vector<std::vector<Rational>> binv_;
  std::vector<std::uint64_t> basic_;
  std::map<std::uint64_t, std::uint64_t> masks_;
  std::size_t pivots_ = 0;
  std::size_t degenerate_run_ = 0;
  bool bland_ = false;
};

/// Cut masks picked by Lawson-Hanson nonnegative least squares in floating
/// point, with the cut columns priced implicitly. A guess at the support of
/// a decomposition; nothing is concluded from it without an exact check.
inline std::vector<std::uint64_t> nnls_support(const FiniteMetric& m) {
  const std::size_t n = m.size();
  const std::size_t rows = n * (n - 1) / 2;
  Eigen::VectorXd d(static_cast<Eigen::Index>(rows));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d(static_cast<Eigen::Index>(pair_index(n, i, j))) = to_double(m(i, j));
  const double tol = 1e-10 * std::max(1.0, d.cwiseAbs().maxCoeff()) * static_cast<double>(rows);

  auto column = [&](std::uint64_t mask) {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(rows));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (((mask >> i) & 1) != ((mask >> j) & 1)) c(static_cast<Eigen::Index>(pair_index(n, i, j))) = 1;
    return c;
  };
  // Gray-code walk returning the cut with the largest a_S . r.
  auto best_cut = [&](const Eigen::VectorXd& r, const std::vector<std::uint64_t>& skip) {
    std::uint64_t mask = 1, best_mask = 0;
    double crossing = 0, best = tol;
    for (std::size_t j = 1; j < n; ++j) crossing += r(static_cast<Eigen::Index>(pair_index(n, 0, j)));
    const std::uint64_t all = (std::uint64_t{1} << (n - 1)) - 1;
    for (std::uint64_t k = 0;; ++k) {
      const std::uint64_t g = k ^ (k >> 1);
      if (g != all && crossing > best && std::find(skip.begin(), skip.end(), mask) == skip.end()) {
        best = crossing;
        best_mask = mask;
      }
      if (k + 1 == (std::uint64_t{1} << (n - 1))) break;
      const auto t = static_cast<std::size_t>(std::countr_zero(k + 1)) + 1;
      mask ^= std::uint64_t{1} << t;
      const bool t_in = (mask >> t) & 1;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == t) continue;
        const double y = r(static_cast<Eigen::Index>(pair_index(n, t, i)));
        crossing += t_in != static_cast<bool>((mask >> i) & 1) ? y : -y;
      }
    }
    return best_mask;
  };

  std::vector<std::uint64_t> passive;
  Eigen::VectorXd lambda;
  auto residual = [&] {
    Eigen::VectorXd r = d;
    for (std::size_t k = 0; k < passive.size(); ++k) r -= lambda(static_cast<Eigen::Index>(k)) * column(passive[k]);
    return r;
  };
  for (std::size_t outer = 0; outer < 20 * rows; ++outer) {
    const std::uint64_t enter = best_cut(residual(), passive);
    if (enter == 0) break;
    passive.push_back(enter);
    lambda.conservativeResize(static_cast<Eigen::Index>(passive.size()));
    lambda(lambda.size() - 1) = 0;
    while (!passive.empty()) {
      Eigen::MatrixXd a(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(passive.size()));
      for (std::size_t k = 0; k < passive.size(); ++k) a.col(static_cast<Eigen::Index>(k)) = column(passive[k]);
      const Eigen::VectorXd z = a.colPivHouseholderQr().solve(d);
      if (z.minCoeff() > 0) {
        lambda = z;
        break;
      }
      double alpha = 1;
      for (Eigen::Index k = 0; k < z.size(); ++k)
        if (z(k) <= 0) alpha = std::min(alpha, lambda(k) / (lambda(k) - z(k)));
      lambda += alpha * (z - lambda);
      std::vector<std::uint64_t> kept;
      std::vector<double> kept_lambda;
      for (std::size_t k = 0; k < passive.size(); ++k)
        if (lambda(static_cast<Eigen::Index>(k)) > 1e-14) {
          kept.push_back(passive[k]);
          kept_lambda.push_back(lambda(static_cast<Eigen::Index>(k)));
        }
      if (kept.size() == passive.size()) break;  // numerically stuck
      passive = std::move(kept);
      lambda = Eigen::Map<Eigen::VectorXd>(kept_lambda.data(), static_cast<Eigen::Index>(kept_lambda.size()));
    }
  }
  return passive;
}

/// Solves Σ λ_S d_S = m exactly over the given cuts (a basic solution when
/// the columns are dependent) and returns it if it is nonnegative.
inline std::optional<CutDecomposition> exact_on_support(const FiniteMetric& m,
                                                        const std::vector<std::uint64_t>& masks) {
  const std::size_t n = m.size();
  const std::size_t rows = n * (n - 1) / 2, cols = masks.size();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t r = pair_index(n, i, j);
      for (std::size_t c = 0; c < cols; ++c)
        if (((masks[c] >> i) & 1) != ((masks[c] >> j) & 1)) a[r][c] = 1;
      a[r][cols] = m(i, j);
    }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[row]);
    const Rational inv = 1 / a[row][c];
    for (auto& v : a[row]) v *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t k = c; k <= cols; ++k)
        if (a[row][k] != 0) a[r][k] -= f * a[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (a[r][cols] != 0) return std::nullopt;
  CutDecomposition dec;
  dec.points = n;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) {
    const Rational& w = a[r][cols];
    if (w < 0) return std::nullopt;
    if (w > 0) dec.terms.push_back({Cut::from_mask(masks[pivot_col[r]], n), w});
  }
  std::sort(dec.terms.begin(), dec.terms.end(), [](const CutTerm& x, const CutTerm& y) { return x.cut < y.cut; });
  if (!dec.reproduces(m)) return std::nullopt;
  return dec;
}

}  // namespace detail

/// Decides whether m lies in the cut cone. Returns a verified decomposition
/// or a verified Farkas certificate. A floating-point NNLS guess at the
/// support is tried first and kept only if it solves the system exactly;
/// otherwise the exact simplex decides, starting from a basis built from
/// that support.
inline L1Result is_l1_embeddable(const FiniteMetric& m, const L1Options& options = {}) {
  const std::size_t n = m.size();
  if (n > options.max_points || n > 63)
    throw InputError("l1 test limited to " + std::to_string(options.max_points) + " points");
  if (n <= 1) return CutDecomposition{n, {}};
  const auto support = detail::nnls_support(m);
  if (auto dec = detail::exact_on_support(m, support)) return *dec;
  detail::CutConeLp lp(m);
  lp.crash(support);
  auto result = lp.solve();
  if (auto* dec = std::get_if<CutDecomposition>(&result)) {
    if (!dec->reproduces(m)) throw InternalError("cut decomposition does not reproduce the metric");
  } else if (!std::get<FarkasCertificate>(result).certifies(m)) {
    throw InternalError("Farkas certificate failed verification");
  }
  return result;
}

/// One coordinate per cut: weight if the point is in S, else 0. Pairwise
/// l1 distances reproduce the decomposed metric.
inline std::vector<std::vector<Rational>> l1_coordinates(const CutDecomposition& dec) {
  std::vector<std::vector<Rational>> coords(dec.points,
                                            std::vector<Rational>(dec.terms.size(), Rational(0)));
  for (std::size_t c = 0; c < dec.terms.size(); ++c)
    for (std::size_t i = 0; i < dec.points; ++i)
      if (dec.terms[c].cut.contains(i)) coords[i][c] = dec.terms[c].weight;
  return coords;
}

struct K4Decomposition {
  MetricGraph graph;       // 2-subdivision of unit K4
  FiniteMetric metric;     // vertex metric, in graph vertex order
  std::vector<std::vector<std::size_t>> sets;  // S_{i,j} for ordered i != j
  CutDecomposition decomposition;              // weights 1/2
};

/// The 2-subdivision of K4 with its explicit twelve-cut decomposition:
/// S_{i,j} holds branch vertex x_i and every vertex within distance 2 of
/// x_i that is not adjacent to x_j; the twelve cut metrics sum to 2d.
inline K4Decomposition k4_explicit_decomposition() {
  const MetricGraph k4 = make_complete(4);
  K4Decomposition out;
  out.graph = subdivide(k4, 2);
  std::vector<Point> vertices;
  for (const auto& id : out.graph.vertices()) vertices.push_back(Point::vertex(id));
  out.metric = distance_matrix(out.graph, vertices);
  const std::size_t n = out.graph.vertex_count();

  auto adjacent = [&](std::size_t a, std::size_t b) {
    for (auto e : out.graph.incident(a))
      if (out.graph.edge(e).other(a) == b) return true;
    return false;
  };
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j) continue;
      std::vector<std::size_t> s;
      for (std::size_t w = 0; w < n; ++w)
        if (w == i || (out.metric(i, w) <= 2 && !adjacent(w, j) && w != j)) s.push_back(w);
      out.sets.push_back(s);
    }

  RationalMatrix twice(n);
  for (const auto& s : out.sets) {
    const Cut c = Cut::from_members(s, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (c.separates(a, b)) twice(a, b) += 1;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (twice(a, b) != 2 * out.metric(a, b))
        throw InternalError("sum of the twelve cut metrics differs from 2d");

  out.decomposition.points = n;
  for (const auto& s : out.sets) out.decomposition.terms.push_back({Cut::from_members(s, n), frac(1, 2)});
  if (!out.decomposition.reproduces(out.metric)) throw InternalError("K4 decomposition check failed");
  return out;
}

}  // namespace negtype
