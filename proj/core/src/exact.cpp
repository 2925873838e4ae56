#include "aalpha/exact.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace aalpha {

namespace {

using u64 = std::uint64_t;

u64 mul_mod(u64 a, u64 b, u64 p) { return (a * b) % p; }

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Descending primes below 2^31.
std::vector<u64> primes_below_2_31(std::size_t count) {
  std::vector<u64> out;
  for (u64 c = (u64{1} << 31) - 1; out.size() < count; c -= 2)
    if (is_prime(c)) out.push_back(c);
  return out;
}

}  // namespace

std::vector<std::uint64_t> char_poly_mod(const DenseMatrix<BigInt>& m, std::uint64_t p) {
  const std::size_t n = m.rows();
  std::vector<u64> h(n * n);
  auto H = [&](std::size_t i, std::size_t j) -> u64& { return h[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) H(i, j) = mpz_fdiv_ui(m(i, j).get_mpz_t(), p);

  // Reduce to upper Hessenberg form by elementary similarity transforms.
  for (std::size_t k = 1; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && H(piv, k - 1) == 0) ++piv;
    if (piv == n) continue;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(H(piv, j), H(k, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(H(i, piv), H(i, k));
    }
    const u64 inv = inv_mod(H(k, k - 1), p);
    for (std::size_t i = k + 1; i < n; ++i) {
      const u64 u = mul_mod(H(i, k - 1), inv, p);
      if (u == 0) continue;
      // row_i -= u * row_k ; col_k += u * col_i
      for (std::size_t j = 0; j < n; ++j) H(i, j) = (H(i, j) + p - mul_mod(u, H(k, j), p)) % p;
      for (std::size_t r = 0; r < n; ++r) H(r, k) = (H(r, k) + mul_mod(u, H(r, i), p)) % p;
    }
  }

  // Characteristic polynomials of the leading principal submatrices:
  // c_{k+1}(x) = (x - h_kk) c_k(x) - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) c_i(x)
  std::vector<std::vector<u64>> c(n + 1);
  c[0] = {1};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<u64> next(k + 2, 0);
    for (std::size_t d = 0; d <= k; ++d) {
      next[d + 1] = (next[d + 1] + c[k][d]) % p;
      next[d] = (next[d] + p - mul_mod(H(k, k), c[k][d], p)) % p;
    }
    u64 prod = 1;
    for (std::size_t ii = k; ii-- > 0;) {
      prod = mul_mod(prod, H(ii + 1, ii), p);
      if (prod == 0) break;
      const u64 t = mul_mod(H(ii, k), prod, p);
      if (t == 0) continue;
      for (std::size_t d = 0; d < c[ii].size(); ++d)
        next[d] = (next[d] + p - mul_mod(t, c[ii][d], p)) % p;
    }
    c[k + 1] = std::move(next);
  }
  return c[n];
}

PolyQ exact_char_poly(const DenseMatrix<Rational>& m) {
  if (m.rows() != m.cols()) throw ContractViolation("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return PolyQ::constant(Rational(1));

  BigInt scale = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den_mpz_t());

  DenseMatrix<BigInt> N(n, n);
  double log2_row = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt sq = 0;
    for (std::size_t j = 0; j < n; ++j) {
      BigInt v = m(i, j).get_num() * (scale / m(i, j).get_den());
      sq += v * v;
      N(i, j) = std::move(v);
    }
    log2_row = std::max(log2_row, 0.5 * static_cast<double>(mpz_sizeinbase(sq.get_mpz_t(), 2)));
  }
  // |c_k| <= C(n,k) H^k <= 2^n H^n, H = max row norm; need primes product > 2 * bound.
  const double bound_bits = static_cast<double>(n) * (1.0 + std::max(log2_row, 0.0)) + 2.0;
  const auto count = static_cast<std::size_t>(std::ceil(bound_bits / 30.0)) + 1;
  const auto primes = primes_below_2_31(count);

  std::vector<BigInt> coeff(n + 1, 0);
  BigInt modulus = 1;
  for (u64 p : primes) {
    const auto r = char_poly_mod(N, p);
    // Garner step: x = x + modulus * ((r - x) * modulus^{-1} mod p)
    const u64 minv = inv_mod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
    for (std::size_t k = 0; k <= n; ++k) {
      const u64 xk = mpz_fdiv_ui(coeff[k].get_mpz_t(), p);
      const u64 t = mul_mod((r[k] + p - xk) % p, minv, p);
      coeff[k] += modulus * static_cast<unsigned long>(t);
    }
    modulus *= static_cast<unsigned long>(p);
  }
  const BigInt half = modulus / 2;
  std::vector<Rational> out(n + 1);
  BigInt denom = 1;  // scale^(n-k), walking k downward
  for (std::size_t k = n + 1; k-- > 0;) {
    BigInt v = coeff[k];
    if (v > half) v -= modulus;
    out[k] = Rational(v, denom);
    out[k].canonicalize();
    denom *= scale;
  }
  return PolyQ(std::move(out));
}

Rational exact_determinant(DenseMatrix<Rational> m) {
  if (m.rows() != m.cols()) throw ContractViolation("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(k, j));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

SymMatrix<double> to_float(const SymMatrix<Rational>& m) {
  SymMatrix<double> out(m.order());
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = i; j < m.order(); ++j) out.set(i, j, m(i, j).get_d());
  return out;
}

}  // namespace aalpha
