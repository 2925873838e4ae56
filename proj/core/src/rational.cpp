#include "aalpha/rational.hpp"

#include <cctype>

#include "aalpha/errors.hpp"

namespace aalpha {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw DomainError("malformed fraction '" + original + "'");
    const BigInt d(std::string(den), 10);
    if (d == 0) throw DomainError("zero denominator in '" + original + "'");
    value = Rational(BigInt(std::string(num), 10), d);
  } else {
    const auto dot = text.find('.');
    const auto ip = text.substr(0, dot);
    const auto fp = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp)) || (dot != std::string_view::npos && fp.empty() && ip.empty()))
      throw DomainError("malformed number '" + original + "'");
    BigInt den = 1;
    for (std::size_t k = 0; k < fp.size(); ++k) den *= 10;
    const std::string digits = std::string(ip.empty() ? "0" : ip) + std::string(fp);
    value = Rational(BigInt(digits, 10), den);
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_str();
}

}  // namespace aalpha
