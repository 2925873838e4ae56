#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace aalpha {

using Rational = mpq_class;
using BigInt = mpz_class;

// Parses "p/q", an integer, or a finite decimal ("0.25") into an exact
// rational. Throws DomainError on malformed text.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }
inline double to_double(double value) { return value; }

}  // namespace aalpha
