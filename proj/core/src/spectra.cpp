#include "aalpha/spectra.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "aalpha/exact.hpp"

namespace aalpha {

namespace {

Eigen::MatrixXd to_eigen(const SymMatrix<double>& m) {
  const auto n = static_cast<Eigen::Index>(m.order());
  Eigen::MatrixXd e(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) e(i, j) = m(i, j);
  return e;
}

}  // namespace

Spectrum Spectrum::from_values(std::vector<double> values, double gap) {
  Spectrum s;
  std::sort(values.begin(), values.end(), std::greater<>());
  s.values = std::move(values);
  std::size_t i = 0;
  while (i < s.values.size()) {
    std::size_t j = i + 1;
    double acc = s.values[i];
    while (j < s.values.size() && s.values[j - 1] - s.values[j] < gap) acc += s.values[j++];
    s.groups.emplace_back(acc / static_cast<double>(j - i), j - i);
    i = j;
  }
  return s;
}

double Spectrum::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

Spectrum eigenvalues_sym(const SymMatrix<double>& m) {
  if (m.order() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(m), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ContractViolation("symmetric eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  return Spectrum::from_values(std::vector<double>(ev.data(), ev.data() + ev.size()));
}

Spectrum eigenvalues_sym(const DenseMatrix<double>& m) {
  if (!m.is_symmetric()) throw ContractViolation("eigenvalues_sym: matrix is not symmetric");
  return eigenvalues_sym(SymMatrix<double>(m));
}

EigenDecomposition eigen_decompose_sym(const SymMatrix<double>& m) {
  const auto n = m.order();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(m));
  if (solver.info() != Eigen::Success) throw ContractViolation("symmetric eigensolver did not converge");
  EigenDecomposition d{std::vector<double>(n), DenseMatrix<double>(n, n)};
  // Eigen returns ascending order.
  for (std::size_t k = 0; k < n; ++k) {
    const auto src = static_cast<Eigen::Index>(n - 1 - k);
    d.values[k] = solver.eigenvalues()(src);
    for (std::size_t i = 0; i < n; ++i)
      d.vectors(i, k) = solver.eigenvectors()(static_cast<Eigen::Index>(i), src);
  }
  return d;
}

double eigen_residual(const SymMatrix<double>& m, const EigenDecomposition& d) {
  const auto n = m.order();
  if (n == 0) return 0.0;
  double res = 0.0, norm = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      double mv = 0.0;
      for (std::size_t j = 0; j < n; ++j) mv += m(i, j) * d.vectors(j, k);
      const double r = mv - d.vectors(i, k) * d.values[k];
      res += r * r;
      norm += m(i, k) * m(i, k);
    }
  if (norm == 0.0) return std::sqrt(res);
  return std::sqrt(res) / (static_cast<double>(n) * std::sqrt(norm));
}

PolyF char_poly(const SymMatrix<double>& m) {
  return PolyF::from_roots(eigenvalues_sym(m).values);
}

PolyQ char_poly(const SymMatrix<Rational>& m) { return exact_char_poly(m); }

double coronal_eval(const SymMatrix<double>& m, double x) {
  const auto n = m.order();
  const auto spec = eigenvalues_sym(m);
  for (double ev : spec.values)
    if (std::abs(x - ev) <= tol::sing)
      throw SingularityError("coronal evaluated within tolerance of eigenvalue " + std::to_string(ev));
  Eigen::MatrixXd shifted = -to_eigen(m);
  shifted.diagonal().array() += x;
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(n));
  const Eigen::VectorXd y = shifted.partialPivLu().solve(ones);
  return ones.dot(y);
}

RationalFunction<double> coronal_regular(std::size_t n, double a) {
  if (n == 0) throw DomainError("coronal_regular: n must be positive");
  return {PolyF{static_cast<double>(n)}, PolyF{-a, 1.0}};
}

RationalFunction<double> coronal_kpq_alpha(std::size_t p, std::size_t q, double alpha) {
  if (p == 0 || q == 0) throw DomainError("coronal_kpq_alpha: p and q must be positive");
  const double s = static_cast<double>(p + q);
  const double pq = static_cast<double>(p * q);
  return {PolyF{-alpha * s * s + 2.0 * pq, s}, PolyF{(2.0 * alpha - 1.0) * pq, -alpha * s, 1.0}};
}

PolyF hoffman_poly(const Graph& g) {
  const auto r = regularity(g);
  if (!r) throw PreconditionError("hoffman_poly: graph is not regular");
  if (!is_connected(g)) throw PreconditionError("hoffman_poly: graph is not connected");
  const auto spec = eigenvalues_sym(adjacency_sym<double>(g));
  const double rr = static_cast<double>(*r);
  PolyF num = PolyF::constant(static_cast<double>(g.order()));
  double den = 1.0;
  // groups are descending; the first is the Perron value r (simple for a
  // connected regular graph).
  for (std::size_t k = 1; k < spec.groups.size(); ++k) {
    const double li = spec.groups[k].first;
    num = num * PolyF::linear(li);
    den *= rr - li;
  }
  return (1.0 / den) * num;
}

DenseMatrix<double> evaluate_at_matrix(const PolyF& p, const SymMatrix<double>& m) {
  const auto n = m.order();
  DenseMatrix<double> acc(n, n);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * m.dense();
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

double a_alpha_energy(const Graph& g, double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw DomainError("A_alpha energy is defined for alpha in [0, 1)");
  const auto spec = eigenvalues_sym(a_alpha_matrix(g, alpha));
  const double shift = 2.0 * alpha * static_cast<double>(g.size()) / static_cast<double>(g.order());
  double e = 0.0;
  for (double v : spec.values) e += std::abs(v - shift);
  return e;
}

double adjacency_energy(const Graph& g) { return a_alpha_energy(g, 0.0); }

}  // namespace aalpha
