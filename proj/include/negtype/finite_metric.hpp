#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "negtype/error.hpp"
#include "negtype/rational.hpp"

namespace negtype {

/// A finite metric space with exact distances. Points carry text labels;
/// two points may share a label (and then sit at distance 0).
struct FiniteMetric {
  std::vector<std::string> labels;
  RationalMatrix dist;

  FiniteMetric() = default;
  FiniteMetric(std::vector<std::string> l, RationalMatrix d)
      : labels(std::move(l)), dist(std::move(d)) {
    if (labels.size() != dist.size()) throw InputError("label count does not match matrix size");
  }

  std::size_t size() const { return labels.size(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return dist(i, j); }

  Rational max_distance() const {
    Rational best(0);
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        if (dist(i, j) > best) best = dist(i, j);
    return best;
  }

  /// Submetric on the given indices, in that order.
  FiniteMetric restrict_to(const std::vector<std::size_t>& idx) const {
    RationalMatrix d(idx.size());
    std::vector<std::string> l;
    for (std::size_t a = 0; a < idx.size(); ++a) {
      l.push_back(labels.at(idx[a]));
      for (std::size_t b = 0; b < idx.size(); ++b) d(a, b) = dist(idx[a], idx[b]);
    }
    return {std::move(l), std::move(d)};
  }

  FiniteMetric scaled(const Rational& t) const {
    FiniteMetric out = *this;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) out.dist(i, j) *= t;
    return out;
  }

  /// Throws InputError unless symmetric, zero on the diagonal, positive
  /// between differently labelled points and triangle-consistent.
  void validate() const {
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
      if (dist(i, i) != 0) throw InputError("nonzero diagonal at " + labels[i]);
      for (std::size_t j = 0; j < n; ++j) {
        if (dist(i, j) != dist(j, i)) throw InputError("asymmetric distance");
        if (i != j && dist(i, j) < 0) throw InputError("negative distance");
        if (i != j && dist(i, j) == 0 && labels[i] != labels[j])
          throw InputError("distinct points " + labels[i] + ", " + labels[j] + " at distance 0");
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (dist(i, j) > dist(i, k) + dist(k, j)) throw InputError("triangle inequality fails");
  }
};

/// Finitely supported real function on the points of a FiniteMetric,
/// keyed by point index. Zero entries are never stored.
class Weighting {
 public:
  Weighting() = default;

  static Weighting from_dense(const std::vector<Rational>& values) {
    Weighting w;
    for (std::size_t i = 0; i < values.size(); ++i) w.add(i, values[i]);
    return w;
  }

  void add(std::size_t index, const Rational& value) {
    if (value == 0) return;
    auto [it, fresh] = values_.try_emplace(index, 0);
    it->second += value;
    if (it->second == 0) values_.erase(it);
  }

  Rational at(std::size_t index) const {
    auto it = values_.find(index);
    return it == values_.end() ? Rational(0) : it->second;
  }

  const std::map<std::size_t, Rational>& entries() const { return values_; }
  bool empty() const { return values_.empty(); }

  Rational sum() const {
    Rational s(0);
    for (const auto& [i, v] : values_) s += v;
    return s;
  }
  Rational abs_sum() const {
    Rational s(0);
    for (const auto& [i, v] : values_) s += abs(v);
    return s;
  }

  std::vector<Rational> dense(std::size_t n) const {
    std::vector<Rational> out(n, Rational(0));
    for (const auto& [i, v] : values_) out.at(i) = v;
    return out;
  }

  friend bool operator==(const Weighting& a, const Weighting& b) { return a.values_ == b.values_; }

 private:
  std::map<std::size_t, Rational> values_;
};

}  // namespace negtype
