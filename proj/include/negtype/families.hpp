#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "negtype/graph.hpp"
#include "negtype/random.hpp"

namespace negtype {

enum class Family { theta, complete, complete_bipartite, cycle, path, random_connected, cactus };

/// Parameters for one of the generated graph families. Only the fields
/// relevant to `family` are read.
struct FamilySpec {
  Family family = Family::complete;
  std::size_t n = 0;  // complete, cycle, path, random_connected
  std::size_t a = 0;  // complete_bipartite
  std::size_t b = 0;
  std::size_t m = 0;  // random_connected edges, cactus blocks
  std::vector<Rational> lengths;  // theta
  std::uint64_t seed = 0;
  Rational min_len{1};
  bool allow_loops = false;
};

namespace detail {

inline std::string vname(std::size_t i) { return "v" + std::to_string(i); }
inline std::string ename(std::size_t i) { return "e" + std::to_string(i); }

inline std::vector<std::string> numbered_vertices(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(vname(i));
  return out;
}

}  // namespace detail

/// Two vertices u, v joined by edges e1, e2, e3 of the given lengths.
inline MetricGraph make_theta(const Rational& l1, const Rational& l2, const Rational& l3) {
  if (l1 <= 0 || l2 <= 0 || l3 <= 0) throw InputError("theta lengths must be positive");
  return MetricGraph::build({"u", "v"},
                            {{"e1", "u", "v", l1}, {"e2", "u", "v", l2}, {"e3", "u", "v", l3}});
}

inline MetricGraph make_complete(std::size_t n) {
  if (n < 1) throw InputError("complete graph needs n >= 1");
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      edges.push_back({detail::ename(edges.size()), detail::vname(i), detail::vname(j), Rational(1)});
  return MetricGraph::build(detail::numbered_vertices(n), std::move(edges));
}

/// Sides are "a0".."a{a-1}" and "b0".."b{b-1}".
inline MetricGraph make_complete_bipartite(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1) throw InputError("complete bipartite graph needs both sides >= 1");
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < a; ++i) vertices.push_back("a" + std::to_string(i));
  for (std::size_t j = 0; j < b; ++j) vertices.push_back("b" + std::to_string(j));
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      edges.push_back({detail::ename(edges.size()), "a" + std::to_string(i), "b" + std::to_string(j),
                       Rational(1)});
  return MetricGraph::build(std::move(vertices), std::move(edges));
}

/// C_n with unit edges; n = 1 is a loop and n = 2 a pair of parallel edges.
inline MetricGraph make_cycle(std::size_t n) {
  if (n < 1) throw InputError("cycle needs n >= 1");
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < n; ++i)
    edges.push_back({detail::ename(i), detail::vname(i), detail::vname((i + 1) % n), Rational(1)});
  return MetricGraph::build(detail::numbered_vertices(n), std::move(edges));
}

/// P_n: n vertices, n-1 unit edges.
inline MetricGraph make_path(std::size_t n) {
  if (n < 1) throw InputError("path needs n >= 1");
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i + 1 < n; ++i)
    edges.push_back({detail::ename(i), detail::vname(i), detail::vname(i + 1), Rational(1)});
  return MetricGraph::build(detail::numbered_vertices(n), std::move(edges));
}

/// Uniform labelled spanning tree (Prüfer decoding) plus m-n+1 uniformly
/// chosen extra edges. Lengths are min_len*(1 + j/60).
inline MetricGraph make_random_connected(std::size_t n, std::size_t m, std::uint64_t seed,
                                         const Rational& min_len, bool allow_loops = false) {
  if (n < 1) throw InputError("random graph needs n >= 1");
  if (m + 1 < n) throw InputError("m < n-1 cannot be connected");
  if (min_len <= 0) throw InputError("min_len must be positive");
  if (n == 1 && m > 0 && !allow_loops) throw InputError("single vertex admits only loops");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (n == 2) pairs.emplace_back(0, 1);
  if (n > 2) {
    std::vector<std::size_t> code(n - 2);
    for (auto& c : code) c = detail::uniform_below(rng, n);
    std::vector<std::size_t> degree(n, 1);
    for (auto c : code) ++degree[c];
    for (auto c : code) {
      std::size_t leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      pairs.emplace_back(leaf, c);
      --degree[leaf];
      --degree[c];
    }
    std::size_t x = n, y = n;
    for (std::size_t v = 0; v < n; ++v)
      if (degree[v] == 1) (x == n ? x : y) = v;
    pairs.emplace_back(x, y);
  }
  while (pairs.size() < m) {
    const auto u = detail::uniform_below(rng, n);
    const auto v = detail::uniform_below(rng, n);
    if (u == v && !allow_loops) continue;
    pairs.emplace_back(u, v);
  }
  std::vector<EdgeSpec> edges;
  for (const auto& [u, v] : pairs)
    edges.push_back({detail::ename(edges.size()), detail::vname(std::min(u, v)),
                     detail::vname(std::max(u, v)), detail::random_length(rng, min_len)});
  return MetricGraph::build(detail::numbered_vertices(n), std::move(edges));
}

/// Grows a cactus: each of `blocks` steps hangs either a pendant edge or a
/// cycle of 2 to 4 edges off a uniformly chosen existing vertex. Every
/// block is an edge or a cycle, so the result is theta-free.
inline MetricGraph make_random_cactus(std::size_t blocks, std::uint64_t seed,
                                      const Rational& min_len) {
  if (min_len <= 0) throw InputError("min_len must be positive");
  std::mt19937_64 rng(seed);
  std::size_t n = 1;
  std::vector<EdgeSpec> edges;
  auto add = [&](std::size_t u, std::size_t v) {
    edges.push_back({detail::ename(edges.size()), detail::vname(u), detail::vname(v),
                     detail::random_length(rng, min_len)});
  };
  for (std::size_t b = 0; b < blocks; ++b) {
    const auto at = detail::uniform_below(rng, n);
    if (detail::uniform_below(rng, 2) == 0) {
      add(at, n++);
      continue;
    }
    const auto len = 2 + detail::uniform_below(rng, 3);
    std::size_t prev = at;
    for (std::size_t k = 1; k < len; ++k) {
      add(prev, n);
      prev = n++;
    }
    add(prev, at);
  }
  return MetricGraph::build(detail::numbered_vertices(n), std::move(edges));
}

/// Dispatches on spec.family.
inline MetricGraph make_named(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::theta:
      if (spec.lengths.size() != 3) throw InputError("theta needs exactly three lengths");
      return make_theta(spec.lengths[0], spec.lengths[1], spec.lengths[2]);
    case Family::complete:
      return make_complete(spec.n);
    case Family::complete_bipartite:
      return make_complete_bipartite(spec.a, spec.b);
    case Family::cycle:
      return make_cycle(spec.n);
    case Family::path:
      return make_path(spec.n);
    case Family::random_connected:
      return make_random_connected(spec.n, spec.m, spec.seed, spec.min_len, spec.allow_loops);
    case Family::cactus:
      return make_random_cactus(spec.m, spec.seed, spec.min_len);
  }
  throw InputError("unknown family");
}

}  // namespace negtype
