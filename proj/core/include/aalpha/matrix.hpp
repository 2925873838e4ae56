#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "aalpha/errors.hpp"

namespace aalpha {

// Row-major dense matrix over an arbitrary scalar (double or Rational).
template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw ContractViolation("matrix product: shape mismatch");
    DenseMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) {
    a.check_same_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }

  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) {
    a.check_same_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }

  friend DenseMatrix operator*(const T& s, DenseMatrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

 private:
  void check_same_shape(const DenseMatrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_)
      throw ContractViolation("matrix sum: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

// Square matrix whose symmetry is maintained by construction: every write
// goes through set(), which mirrors the entry.
template <typename T>
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n, const T& fill = T(0)) : m_(n, n, fill) {}

  // Adopts a dense matrix; throws ContractViolation unless exactly symmetric.
  explicit SymMatrix(DenseMatrix<T> dense) : m_(std::move(dense)) {
    if (!m_.is_symmetric())
      throw ContractViolation("matrix is not symmetric");
  }

  std::size_t order() const noexcept { return m_.rows(); }
  const T& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  void set(std::size_t i, std::size_t j, const T& v) {
    m_(i, j) = v;
    m_(j, i) = v;
  }
  void add(std::size_t i, std::size_t j, const T& v) {
    m_(i, j) += v;
    if (i != j) m_(j, i) += v;
  }

  const DenseMatrix<T>& dense() const noexcept { return m_; }

  friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
    return a.m_ == b.m_;
  }
  friend SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
    return SymMatrix(a.m_ + b.m_);
  }
  friend SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) {
    return SymMatrix(a.m_ - b.m_);
  }
  friend SymMatrix operator*(const T& s, const SymMatrix& a) {
    return SymMatrix(s * a.m_);
  }

 private:
  DenseMatrix<T> m_;
};

template <typename T>
T trace(const SymMatrix<T>& m) {
  T t(0);
  for (std::size_t i = 0; i < m.order(); ++i) t += m(i, i);
  return t;
}

template <typename T>
std::vector<T> row_sums(const SymMatrix<T>& m) {
  std::vector<T> s(m.order(), T(0));
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j) s[i] += m(i, j);
  return s;
}

}  // namespace aalpha
