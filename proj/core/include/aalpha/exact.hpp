#pragma once

#include <cstdint>
#include <vector>

#include "aalpha/matrix.hpp"
#include "aalpha/polynomial.hpp"
#include "aalpha/rational.hpp"

namespace aalpha {

// Exact characteristic polynomial det(xI - M) of a rational matrix.
//
// M is scaled by the lcm L of its denominators to an integer matrix N; the
// characteristic polynomial of N is computed modulo enough 31-bit primes
// (Hessenberg reduction, O(n^3) per prime) to exceed twice the Hadamard
// bound on its coefficients, then lifted by Chinese remaindering into the
// symmetric residue range. Finally c_k(M) = c_k(N) / L^(n-k).
PolyQ exact_char_poly(const DenseMatrix<Rational>& m);
inline PolyQ exact_char_poly(const SymMatrix<Rational>& m) { return exact_char_poly(m.dense()); }

// Characteristic polynomial of an integer matrix reduced modulo a prime
// p < 2^32, coefficients ascending in [0, p).
std::vector<std::uint64_t> char_poly_mod(const DenseMatrix<BigInt>& m, std::uint64_t p);

// Determinant by fraction-preserving Gaussian elimination.
Rational exact_determinant(DenseMatrix<Rational> m);

SymMatrix<double> to_float(const SymMatrix<Rational>& m);

}  // namespace aalpha
