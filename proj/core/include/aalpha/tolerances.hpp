#pragma once

namespace aalpha::tol {

inline constexpr double eig = 1e-12;      // relative eigen-residual
inline constexpr double num = 1e-9;       // value comparisons
inline constexpr double cluster = 1e-7;   // multiplicity grouping gap
inline constexpr double hoffman = 1e-8;   // max |P(A) - J|
inline constexpr double sing = 1e-8;      // distance from a pole
inline constexpr double match = 1e-8;     // closed form vs. oracle spectra
inline constexpr double det = 1e-9;       // relative determinant agreement
inline constexpr double root = 1e-10;     // relative polynomial residual

}  // namespace aalpha::tol
