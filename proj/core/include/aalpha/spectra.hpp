#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "aalpha/errors.hpp"
#include "aalpha/graph.hpp"
#include "aalpha/matrix.hpp"
#include "aalpha/polynomial.hpp"
#include "aalpha/rational.hpp"
#include "aalpha/tolerances.hpp"

namespace aalpha {

// Sorted (descending) eigenvalue multiset plus a grouped view. Adjacent
// values closer than the clustering gap share a group; a group's value is
// the mean of its members.
struct Spectrum {
  std::vector<double> values;
  std::vector<std::pair<double, std::size_t>> groups;

  static Spectrum from_values(std::vector<double> values, double gap = tol::cluster);
  std::size_t size() const noexcept { return values.size(); }
  double sum() const;
};

template <typename T>
SymMatrix<T> adjacency_sym(const Graph& g) {
  SymMatrix<T> a(g.order());
  for (const auto& e : g.edges()) a.set(e.u, e.v, T(1));
  return a;
}

template <typename T>
SymMatrix<T> degree_sym(const Graph& g) {
  SymMatrix<T> d(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) d.set(v, v, T(static_cast<long>(g.degree(v))));
  return d;
}

// alpha D(G) + (1 - alpha) A(G). Row i sums to deg(i) for every alpha.
// Throws DomainError unless 0 <= alpha <= 1.
template <typename T>
SymMatrix<T> a_alpha_matrix(const Graph& g, const T& alpha) {
  if (alpha < T(0) || alpha > T(1)) throw DomainError("alpha must lie in [0, 1]");
  SymMatrix<T> m(g.order());
  const T off = T(1) - alpha;
  for (std::size_t v = 0; v < g.order(); ++v)
    m.set(v, v, T(alpha * T(static_cast<long>(g.degree(v)))));
  for (const auto& e : g.edges()) m.set(e.u, e.v, off);
  return m;
}

// All eigenvalues of a symmetric matrix, descending.
Spectrum eigenvalues_sym(const SymMatrix<double>& m);
// Throws ContractViolation unless m is exactly symmetric.
Spectrum eigenvalues_sym(const DenseMatrix<double>& m);

struct EigenDecomposition {
  std::vector<double> values;   // descending
  DenseMatrix<double> vectors;  // column k pairs with values[k]
};
EigenDecomposition eigen_decompose_sym(const SymMatrix<double>& m);

// ||M V - V diag(values)||_F / (n ||M||_F), the backward-error measure the
// eigensolver guarantees to keep below tol::eig.
double eigen_residual(const SymMatrix<double>& m, const EigenDecomposition& d);

// Float mode: monic polynomial built from the eigenvalues.
PolyF char_poly(const SymMatrix<double>& m);
// Exact mode: see exact_char_poly.
PolyQ char_poly(const SymMatrix<Rational>& m);

// Sum of the entries of (xI - M)^{-1}: one LU solve against the all-ones
// vector followed by a dot with all-ones. Throws SingularityError when x is
// within tol::sing of an eigenvalue of M.
double coronal_eval(const SymMatrix<double>& m, double x);

// n / (x - a): coronal of any order-n matrix with constant row sum a.
RationalFunction<double> coronal_regular(std::size_t n, double a);

// Coronal of A_alpha(K_{p,q}):
// ((p+q)x - alpha(p+q)^2 + 2pq) / (x^2 - alpha(p+q)x + (2 alpha - 1)pq).
// alpha = 0 gives the adjacency coronal ((p+q)x + 2pq) / (x^2 - pq).
RationalFunction<double> coronal_kpq_alpha(std::size_t p, std::size_t q, double alpha);

// Polynomial P with P(A) = J for a connected regular graph:
// n prod_{i>=2} (x - l_i) / prod_{i>=2} (r - l_i) over the distinct
// adjacency eigenvalues l_i != r (clustered at tol::cluster).
// Throws PreconditionError for a disconnected or non-regular graph.
PolyF hoffman_poly(const Graph& g);

// p(M) by Horner's rule.
DenseMatrix<double> evaluate_at_matrix(const PolyF& p, const SymMatrix<double>& m);

// sum_i |lambda_i(A_alpha) - 2 alpha m / n|, 0 <= alpha < 1.
double a_alpha_energy(const Graph& g, double alpha);
// sum_i |lambda_i(A)|
double adjacency_energy(const Graph& g);

}  // namespace aalpha
