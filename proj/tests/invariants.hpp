#pragma once

// Exact algebraic invariants of A_alpha, shared by the unit and acceptance
// tests. Each returns an empty string on success, else what broke.

#include <random>
#include <string>
#include <vector>

#include "aalpha/graph.hpp"
#include "aalpha/spectra.hpp"
#include "oracles.hpp"

namespace invariants {

using aalpha::DenseMatrix;
using aalpha::Graph;
using aalpha::Rational;

inline DenseMatrix<Rational> to_q(const DenseMatrix<int>& m) {
  DenseMatrix<Rational> q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = m(i, j);
  return q;
}

inline std::string check_graph(const Graph& g, const Rational& a, const Rational& b) {
  const auto aa = aalpha::a_alpha_matrix(g, a);
  const auto ab = aalpha::a_alpha_matrix(g, b);
  if (aa.dense() != oracle::a_alpha_reference(g, a)) return "A_alpha differs from its entrywise definition";
  const auto rows = aalpha::row_sums(aa);
  for (std::size_t v = 0; v < g.order(); ++v)
    if (rows[v] != Rational(static_cast<long>(g.degree(v)))) return "row sum != degree";
  if (aalpha::trace(aa) != Rational(2 * static_cast<long>(g.size())) * a) return "trace != 2 m alpha";
  const auto d = to_q(aalpha::degree_matrix(g)), adj = to_q(aalpha::adjacency_matrix(g));
  if (aa.dense() - ab.dense() != (a - b) * (d - adj)) return "A_a - A_b != (a - b)(D - A)";
  if (aalpha::a_alpha_matrix(g, Rational(1, 2)).dense() != Rational(1, 2) * (d + adj)) return "A_1/2 != (D + A)/2";
  if (const auto r = aalpha::regularity(g)) {
    const auto inc = aalpha::incidence_matrix(g);
    if (inc * inc.transpose() != aalpha::adjacency_matrix(g) + static_cast<int>(*r) * DenseMatrix<int>::identity(g.order()))
      return "R R^T != A + r I";
  }
  return {};
}

// Circulant graph on n vertices with the given connection set; regular by
// construction, so the incidence identity is exercised on random instances.
inline Graph random_circulant(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  std::uniform_int_distribution<std::size_t> order(lo, hi);
  const std::size_t n = order(rng);
  std::bernoulli_distribution coin(0.5);
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t s = 1; s <= n / 2; ++s)
    if (coin(rng))
      for (std::size_t v = 0; v < n; ++v) e.emplace_back(v, (v + s) % n);
  return Graph(n, std::move(e));
}

struct Summary {
  std::size_t graphs = 0, regular = 0, failures = 0;
  std::string first_failure;
};

// 200 random small graphs: 150 G(n, p) and 50 circulants, random rational
// alpha and beta in [0, 1].
inline Summary run_random(std::uint64_t seed = 20261017) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> den(1, 12);
  auto rand_alpha = [&] {
    const long q = den(rng);
    return oracle::frac(std::uniform_int_distribution<long>(0, q)(rng), q);
  };
  Summary s;
  for (int k = 0; k < 200; ++k) {
    const Graph g = k < 150 ? oracle::random_graph(rng, 1, 12, 0.1 + 0.8 * (k % 10) / 9.0) : random_circulant(rng, 3, 14);
    ++s.graphs;
    if (aalpha::regularity(g)) ++s.regular;
    const auto err = check_graph(g, rand_alpha(), rand_alpha());
    if (!err.empty()) {
      if (s.failures++ == 0) s.first_failure = "graph " + std::to_string(k) + ": " + err;
    }
  }
  return s;
}

}  // namespace invariants
