#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "aalpha/errors.hpp"
#include "aalpha/rational.hpp"

namespace aalpha {

// Dense univariate polynomial, coefficients stored in ascending degree
// order. Trailing zeros are trimmed, so the leading coefficient is nonzero
// unless the polynomial is zero (empty coefficient list, degree -1).
template <typename T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const T& v) { return Polynomial({v}); }
  static Polynomial x() { return Polynomial({T(0), T(1)}); }
  // x - root
  static Polynomial linear(const T& root) { return Polynomial({T(-root), T(1)}); }

  // prod (x - r) over the given roots.
  static Polynomial from_roots(const std::vector<T>& roots) {
    std::vector<T> c{T(1)};
    for (const auto& r : roots) {
      std::vector<T> next(c.size() + 1, T(0));
      for (std::size_t k = 0; k < c.size(); ++k) {
        next[k + 1] += c[k];
        next[k] -= r * c[k];
      }
      c = std::move(next);
    }
    return Polynomial(std::move(c));
  }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<T>& coeffs() const noexcept { return c_; }
  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
  T leading() const { return c_.empty() ? T(0) : c_.back(); }

  T operator()(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = T(static_cast<long>(k)) * c_[k];
    return Polynomial(std::move(d));
  }

  // p(x - shift)
  Polynomial shifted(const T& shift) const {
    Polynomial result;
    const Polynomial arg({T(-shift), T(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      result = result * arg + constant(*it);
    return result;
  }

  Polynomial monic() const {
    if (c_.empty()) return {};
    std::vector<T> m(c_);
    const T lead = c_.back();
    for (auto& v : m) v /= lead;
    return Polynomial(std::move(m));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (T(-1) * b);
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const T& s, const Polynomial& a) {
    std::vector<T> c(a.c_);
    for (auto& v : c) v *= s;
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }

  std::vector<T> c_;
};

using PolyF = Polynomial<double>;
using PolyQ = Polynomial<Rational>;

// sum |c_k| |x|^k: scale for relative residuals of p(x).
inline double abs_scale(const PolyF& p, double x) {
  double acc = 0.0;
  const double ax = std::abs(x);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * ax + std::abs(*it);
  return acc;
}

inline PolyF to_float(const PolyQ& p) {
  std::vector<double> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back(v.get_d());
  return PolyF(std::move(c));
}

// Ratio of two polynomials; the denominator is never the zero polynomial.
template <typename T>
class RationalFunction {
 public:
  RationalFunction(Polynomial<T> num, Polynomial<T> den)
      : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ContractViolation("rational function with zero denominator");
  }

  const Polynomial<T>& numerator() const noexcept { return num_; }
  const Polynomial<T>& denominator() const noexcept { return den_; }

  // Throws SingularityError at a pole.
  T operator()(const T& x) const {
    const T d = den_(x);
    if (d == T(0)) throw SingularityError("rational function evaluated at a pole");
    return num_(x) / d;
  }

 private:
  Polynomial<T> num_;
  Polynomial<T> den_;
};

}  // namespace aalpha
