#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "aalpha/graph.hpp"
#include "aalpha/matrix.hpp"
#include "aalpha/polynomial.hpp"
#include "aalpha/spectra.hpp"

namespace aalpha {

// Factored A_alpha characteristic polynomials of central graphs and central
// vertex joins, evaluated from the small input graphs only. The explicit
// matrices are never built here; verify.hpp compares against them.
//
// Throughout, G / G1 must be connected and r-regular with r >= 2: the
// exponent of the (x - 2 alpha) factor is m - n = n(r - 2)/2, and the
// all-ones vector must be the Perron eigenvector of A(G).

struct LinearFactor {
  double root = 0.0;
  std::size_t multiplicity = 0;
};

struct PolyFactor {
  PolyF poly;
  std::size_t multiplicity = 1;
  std::string label;
};

// The factor of the join polynomial that involves the coronal of a second
// graph with no closed-form coronal:
//   (x - 2a)(x - a n2 - n1 + 1 + (1-a) r1 - n1 (1-a)^2 Gamma(x - a n1)) - 2 r1 (1-a)^2
// where Gamma is the coronal of A_alpha(G2). It behaves like x^2 at infinity
// and counts as degree 2.
struct CoronalTerm {
  SymMatrix<double> second;  // A_alpha(G2)
  double alpha = 0.0;
  std::size_t n1 = 0;
  std::size_t r1 = 0;

  double operator()(double x) const;
};

struct FactoredCharPoly {
  LinearFactor linear;  // (x - 2 alpha)^multiplicity
  std::vector<PolyFactor> factors;
  std::optional<CoronalTerm> coronal;
  std::size_t order = 0;  // order of the matrix the product describes

  // sum of degree x multiplicity over all factors (coronal term counts 2).
  std::size_t degree_count() const;
  double evaluate(double x) const;
};

// ---- factor builders --------------------------------------------------------

// Central graph, contribution of the all-ones eigenvector of A(G):
// x^2 + ((1-a)(r-n) - (2+n)a + 1) x - 2(r + a - a n - r a)
PolyF central_perron_quadratic(std::size_t n, std::size_t r, double alpha);

// Central graph, contribution of an eigenvalue l != r of A(G):
// x^2 + ((1-a) l - 2a - n a + 1) x - (1 - a^2) l + (2n - r) a^2 - 2a(1 - r) - r
PolyF central_quadratic(std::size_t n, std::size_t r, double lambda, double alpha);

// Join, contribution of an eigenvalue l != r1 of A(G1):
// (x - 2a)(x - a(n1 + n2 + l) + 1 + l) - (1-a)^2 (r1 + l)
PolyF cvjoin_quadratic(std::size_t n1, std::size_t n2, std::size_t r1, double lambda, double alpha);

// Join with an r2-regular G2: the coronal n2/(x - a n1 - r2) cleared of its
// denominator. coronal_weight multiplies n1 Gamma; the value matching the
// explicit matrix is (1 - alpha)^2, which is the default.
PolyF cvjoin_regular_cubic(std::size_t n1, std::size_t r1, std::size_t n2, std::size_t r2,
                           double alpha, std::optional<double> coronal_weight = std::nullopt);

// Join with G2 = K_{p,q}: the A_alpha(K_{p,q}) coronal substituted and the
// quadratic denominator cleared, leaving a quartic.
PolyF cvjoin_kpq_quartic(std::size_t n1, std::size_t r1, std::size_t p, std::size_t q,
                         double alpha, std::optional<double> coronal_weight = std::nullopt);

// ---- factorizations and spectra ----------------------------------------------

FactoredCharPoly charpoly_central_regular(const Graph& g, double alpha);
Spectrum spectrum_central_regular(const Graph& g, double alpha);

struct SecondGraph {
  enum class Kind { regular, kpq, generic };
  Kind kind = Kind::generic;
  std::optional<Graph> graph;  // regular and generic
  std::size_t p = 0, q = 0;    // kpq

  static SecondGraph regular(Graph g) { return {Kind::regular, std::move(g), 0, 0}; }
  static SecondGraph kpq(std::size_t p, std::size_t q) { return {Kind::kpq, std::nullopt, p, q}; }
  static SecondGraph generic(Graph g) { return {Kind::generic, std::move(g), 0, 0}; }
  std::size_t order() const { return kind == Kind::kpq ? p + q : graph->order(); }
  std::size_t size() const { return kind == Kind::kpq ? p * q : graph->size(); }
};

FactoredCharPoly charpoly_cvjoin(const Graph& g1, const SecondGraph& g2, double alpha);
// G1 and G2 connected regular, r1 >= 2.
Spectrum spectrum_cvjoin_regular(const Graph& g1, const Graph& g2, double alpha);
Spectrum spectrum_cvjoin_kpq(const Graph& g1, std::size_t p, std::size_t q, double alpha);

// Roots of every factor, with multiplicities. Throws ConsistencyError when
// the count differs from the matrix order and PreconditionError when the
// factorization carries an unrooted coronal term.
Spectrum spectrum_from_factors(const FactoredCharPoly& f);

// All deg(p) roots of a real-rooted polynomial: companion-matrix
// eigenvalues, then clusters of nearly equal roots are tested for being one
// multiple root (Newton on the matching derivative) and isolated roots are
// Newton-polished. Ascending order. Throws ContractViolation for a root with
// a non-negligible imaginary part or a residual above tol::root.
std::vector<double> solve_poly_real(const PolyF& p);

}  // namespace aalpha
