#include "aalpha/closedform.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

#include "aalpha/tolerances.hpp"

namespace aalpha {

namespace {

double sz(std::size_t v) { return static_cast<double>(v); }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

struct RegularInput {
  std::size_t n, m, r;
};

RegularInput require_regular_seed(const Graph& g, const char* who) {
  const auto r = regularity(g);
  if (!r)
    throw PreconditionError(std::string(who) + ": graph is not regular; use the explicit-matrix oracle");
  if (*r < 2)
    throw PreconditionError(std::string(who) + ": r < 2; use the explicit-matrix oracle");
  if (!is_connected(g))
    throw PreconditionError(std::string(who) + ": graph is not connected; use the explicit-matrix oracle");
  return {g.order(), g.size(), *r};
}

void require_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in [0, 1]");
}

// Adjacency eigenvalues of a connected regular graph with one copy of the
// Perron value r removed, descending.
std::vector<double> non_perron(const Spectrum& s, double r) {
  std::vector<double> v = s.values;
  auto it = std::min_element(v.begin(), v.end(),
                             [r](double a, double b) { return std::abs(a - r) < std::abs(b - r); });
  v.erase(it);
  return v;
}

// Newton polish that keeps the iterate with the smallest residual and never
// strays from the starting estimate far enough to land on another root.
double newton(const PolyF& p, double x0) {
  const PolyF dp = p.derivative();
  const double radius = 1e-3 * (1.0 + std::abs(x0));
  double x = x0, best = x0, best_res = std::abs(p(x0));
  for (int it = 0; it < 50 && best_res > 0.0; ++it) {
    const double d = dp(x);
    if (d == 0.0) break;
    const double nx = x - p(x) / d;
    if (nx == x || !std::isfinite(nx) || std::abs(nx - x0) > radius) break;
    x = nx;
    const double res = std::abs(p(x));
    if (res < best_res) {
      best = x;
      best_res = res;
    }
  }
  return best;
}

}  // namespace

// ---- FactoredCharPoly ---------------------------------------------------------

double CoronalTerm::operator()(double x) const {
  const double a = alpha;
  const double w = (1.0 - a) * (1.0 - a);
  const double gamma = coronal_eval(second, x - a * sz(n1));
  const double n2 = sz(second.order());
  return (x - 2.0 * a) * (x - a * n2 - sz(n1) + 1.0 + (1.0 - a) * sz(r1) - sz(n1) * w * gamma) -
         2.0 * sz(r1) * w;
}

std::size_t FactoredCharPoly::degree_count() const {
  std::size_t total = linear.multiplicity;
  for (const auto& f : factors) total += static_cast<std::size_t>(std::max(f.poly.degree(), 0)) * f.multiplicity;
  if (coronal) total += 2;
  return total;
}

double FactoredCharPoly::evaluate(double x) const {
  double v = std::pow(x - linear.root, static_cast<double>(linear.multiplicity));
  for (const auto& f : factors) v *= std::pow(f.poly(x), static_cast<double>(f.multiplicity));
  if (coronal) v *= (*coronal)(x);
  return v;
}

// ---- factor builders ------------------------------------------------------------

PolyF central_perron_quadratic(std::size_t n, std::size_t r, double a) {
  const double N = sz(n), R = sz(r);
  return PolyF{-2.0 * (R + a - a * N - R * a), (1.0 - a) * (R - N) - (2.0 + N) * a + 1.0, 1.0};
}

PolyF central_quadratic(std::size_t n, std::size_t r, double l, double a) {
  const double N = sz(n), R = sz(r);
  return PolyF{-(1.0 - a * a) * l + (2.0 * N - R) * a * a - 2.0 * a * (1.0 - R) - R,
               (1.0 - a) * l - 2.0 * a - N * a + 1.0, 1.0};
}

PolyF cvjoin_quadratic(std::size_t n1, std::size_t n2, std::size_t r1, double l, double a) {
  const PolyF lhs = PolyF::linear(2.0 * a) * PolyF{-a * (sz(n1) + sz(n2) + l) + 1.0 + l, 1.0};
  return lhs - PolyF::constant((1.0 - a) * (1.0 - a) * (sz(r1) + l));
}

PolyF cvjoin_regular_cubic(std::size_t n1, std::size_t r1, std::size_t n2, std::size_t r2,
                           double a, std::optional<double> coronal_weight) {
  const double w = coronal_weight.value_or((1.0 - a) * (1.0 - a));
  const double b = (1.0 - a) * (1.0 - a);
  const PolyF shifted{-a * sz(n1) - sz(r2), 1.0};  // x - a n1 - r2
  const PolyF inner = shifted * PolyF{-a * sz(n2) - sz(n1) + 1.0 + (1.0 - a) * sz(r1), 1.0} -
                      PolyF::constant(sz(n1) * w * sz(n2));
  return PolyF::linear(2.0 * a) * inner - (2.0 * sz(r1) * b) * shifted;
}

PolyF cvjoin_kpq_quartic(std::size_t n1, std::size_t r1, std::size_t p, std::size_t q, double a,
                         std::optional<double> coronal_weight) {
  const double w = coronal_weight.value_or((1.0 - a) * (1.0 - a));
  const double b = (1.0 - a) * (1.0 - a);
  const auto gamma = coronal_kpq_alpha(p, q, a);
  const double shift = a * sz(n1);
  const PolyF num = gamma.numerator().shifted(shift);    // N(x - a n1)
  const PolyF den = gamma.denominator().shifted(shift);  // D(x - a n1)
  const PolyF inner = den * PolyF{-a * sz(p + q) - sz(n1) + 1.0 + (1.0 - a) * sz(r1), 1.0} -
                      (sz(n1) * w) * num;
  return PolyF::linear(2.0 * a) * inner - (2.0 * sz(r1) * b) * den;
}

// ---- factorizations -------------------------------------------------------------

FactoredCharPoly charpoly_central_regular(const Graph& g, double alpha) {
  require_alpha(alpha);
  const auto in = require_regular_seed(g, "central graph closed form");
  FactoredCharPoly f;
  f.order = in.n + in.m;
  f.linear = {2.0 * alpha, in.m - in.n};
  f.factors.push_back({central_perron_quadratic(in.n, in.r, alpha), 1, "perron quadratic"});
  const auto spec = eigenvalues_sym(adjacency_sym<double>(g));
  for (double l : non_perron(spec, sz(in.r)))
    f.factors.push_back({central_quadratic(in.n, in.r, l, alpha), 1, "eigen quadratic lambda=" + fmt(l)});
  return f;
}

Spectrum spectrum_central_regular(const Graph& g, double alpha) {
  return spectrum_from_factors(charpoly_central_regular(g, alpha));
}

FactoredCharPoly charpoly_cvjoin(const Graph& g1, const SecondGraph& g2, double alpha) {
  require_alpha(alpha);
  const auto in = require_regular_seed(g1, "central vertex join closed form");
  const std::size_t n2 = g2.order();
  FactoredCharPoly f;
  f.order = in.n + in.m + n2;
  f.linear = {2.0 * alpha, in.m - in.n};
  const double shift = alpha * sz(in.n);

  switch (g2.kind) {
    case SecondGraph::Kind::regular: {
      const auto r2 = regularity(*g2.graph);
      if (!r2) throw PreconditionError("central vertex join closed form: second graph is not regular");
      const auto mu = eigenvalues_sym(a_alpha_matrix(*g2.graph, alpha));
      for (double v : non_perron(mu, sz(*r2)))
        f.factors.push_back({PolyF::linear(shift + v), 1, "second-graph eigenvalue " + fmt(v)});
      break;
    }
    case SecondGraph::Kind::kpq: {
      if (g2.p == 0 || g2.q == 0) throw PreconditionError("K_{p,q} needs p, q >= 1");
      f.factors.push_back({PolyF::linear(alpha * sz(in.n + g2.p)), g2.q - 1, "K_{p,q} part-q eigenvalue"});
      f.factors.push_back({PolyF::linear(alpha * sz(in.n + g2.q)), g2.p - 1, "K_{p,q} part-p eigenvalue"});
      break;
    }
    case SecondGraph::Kind::generic: {
      const auto mu = eigenvalues_sym(a_alpha_matrix(*g2.graph, alpha));
      for (double v : mu.values)
        f.factors.push_back({PolyF::linear(shift + v), 1, "second-graph eigenvalue " + fmt(v)});
      break;
    }
  }

  const auto spec = eigenvalues_sym(adjacency_sym<double>(g1));
  for (double l : non_perron(spec, sz(in.r)))
    f.factors.push_back({cvjoin_quadratic(in.n, n2, in.r, l, alpha), 1, "eigen quadratic lambda=" + fmt(l)});

  switch (g2.kind) {
    case SecondGraph::Kind::regular:
      f.factors.push_back({cvjoin_regular_cubic(in.n, in.r, n2, *regularity(*g2.graph), alpha), 1,
                           "coronal cubic"});
      break;
    case SecondGraph::Kind::kpq:
      f.factors.push_back({cvjoin_kpq_quartic(in.n, in.r, g2.p, g2.q, alpha), 1, "coronal quartic"});
      break;
    case SecondGraph::Kind::generic:
      f.coronal = CoronalTerm{a_alpha_matrix(*g2.graph, alpha), alpha, in.n, in.r};
      break;
  }
  return f;
}

Spectrum spectrum_cvjoin_regular(const Graph& g1, const Graph& g2, double alpha) {
  if (!regularity(g2)) throw PreconditionError("spectrum_cvjoin_regular: second graph is not regular");
  if (!is_connected(g2)) throw PreconditionError("spectrum_cvjoin_regular: second graph is not connected");
  return spectrum_from_factors(charpoly_cvjoin(g1, SecondGraph::regular(g2), alpha));
}

Spectrum spectrum_cvjoin_kpq(const Graph& g1, std::size_t p, std::size_t q, double alpha) {
  if (p == 0 || q == 0) throw PreconditionError("spectrum_cvjoin_kpq: p and q must be >= 1");
  const auto f = charpoly_cvjoin(g1, SecondGraph::kpq(p, q), alpha);
  if (f.factors.back().poly.degree() != 4)
    throw ConsistencyError("K_{p,q} coronal factor does not have degree 4");
  return spectrum_from_factors(f);
}

Spectrum spectrum_from_factors(const FactoredCharPoly& f) {
  if (f.coronal)
    throw PreconditionError("factorization has a coronal term without a closed form; use the explicit-matrix oracle");
  std::vector<double> roots(f.linear.multiplicity, f.linear.root);
  for (const auto& factor : f.factors) {
    if (factor.multiplicity == 0) continue;
    const auto r = solve_poly_real(factor.poly);
    for (std::size_t k = 0; k < factor.multiplicity; ++k) roots.insert(roots.end(), r.begin(), r.end());
  }
  if (roots.size() != f.order)
    throw ConsistencyError("closed form produced " + std::to_string(roots.size()) +
                           " roots for a matrix of order " + std::to_string(f.order));
  return Spectrum::from_values(std::move(roots));
}

// ---- real roots ---------------------------------------------------------------------

std::vector<double> solve_poly_real(const PolyF& poly) {
  if (poly.is_zero()) throw ContractViolation("solve_poly_real: zero polynomial");
  const PolyF p = poly.monic();
  const int deg = p.degree();
  if (deg == 0) return {};
  if (deg == 1) return {-p.coeff(0)};

  const auto n = static_cast<Eigen::Index>(deg);
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) comp(i, n - 1) = -p.coeff(static_cast<std::size_t>(i));
  Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, false);
  if (solver.info() != Eigen::Success) throw ContractViolation("solve_poly_real: companion eigensolver failed");

  std::vector<double> approx;
  for (Eigen::Index i = 0; i < n; ++i) {
    const std::complex<double> z = solver.eigenvalues()(i);
    if (std::abs(z.imag()) > 1e-4 * (1.0 + std::abs(z)))
      throw ContractViolation("solve_poly_real: complex root " + fmt(z.real()) + (z.imag() < 0 ? "" : "+") +
                              fmt(z.imag()) + "i; the factor is not real-rooted");
    approx.push_back(z.real());
  }
  std::sort(approx.begin(), approx.end());

  std::vector<double> roots;
  std::size_t i = 0;
  while (i < approx.size()) {
    std::size_t j = i + 1;
    while (j < approx.size() && approx[j] - approx[j - 1] <= 1e-4 * (1.0 + std::abs(approx[j]))) ++j;
    const std::size_t k = j - i;
    bool merged = false;
    if (k > 1) {
      double z = 0.0;
      for (std::size_t t = i; t < j; ++t) z += approx[t];
      z /= static_cast<double>(k);
      PolyF d = p;
      for (std::size_t t = 0; t + 1 < k; ++t) d = d.derivative();
      z = newton(d, z);
      merged = true;
      PolyF dj = p;
      for (std::size_t t = 0; t + 1 < k && merged; ++t) {
        if (std::abs(dj(z)) > 1e-9 * std::max(abs_scale(dj, z), 1e-300)) merged = false;
        dj = dj.derivative();
      }
      if (merged) roots.insert(roots.end(), k, z);
    }
    if (!merged)
      for (std::size_t t = i; t < j; ++t) roots.push_back(newton(p, approx[t]));
    i = j;
  }

  for (double z : roots)
    if (std::abs(p(z)) > tol::root * abs_scale(p, z))
      throw ContractViolation("solve_poly_real: residual too large at root " + fmt(z));
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace aalpha
