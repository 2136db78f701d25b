#pragma once

// Exact rational scalars. GMP's mpq_class keeps every value canonical
// (positive denominator, coprime numerator) as long as construction from a
// numerator/denominator pair goes through make_rational or parse_rational.

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "nilcert/error.hpp"

namespace nilcert {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

/// Parses "n" or "n/d" (optional sign, surrounding blanks ignored).
inline Rational parse_rational(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (text.empty()) throw DomainError("empty rational literal");
  const auto slash = text.find('/');
  auto parse_int = [&](std::string_view part) {
    std::string s(part);
    const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos) {
      throw DomainError("malformed rational literal '" + std::string(text) + "'");
    }
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s, 10);
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace nilcert
