#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "jkron/error.hpp"

namespace jkron {

/// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
/// positive denominator) as long as every construction path canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "num/den" or an integer literal. Surrounding blanks are ignored.
inline Rational parse_rational(std::string_view text) {
  auto first = text.find_first_not_of(" \t\n\r");
  auto last = text.find_last_not_of(" \t\n\r");
  if (first == std::string_view::npos)
    throw ParseError("empty rational literal");
  std::string s(text.substr(first, last - first + 1));
  auto valid = [](const std::string& part) {
    if (part.empty())
      return false;
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size())
      return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9')
        return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("bad rational literal '" + s + "'");
  if (num[0] == '+')
    num.erase(0, 1);
  Integer n(num, 10), d(den, 10);
  if (d == 0)
    throw ParseError("zero denominator in '" + s + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline Integer binomial(std::size_t n, std::size_t k) {
  if (k > n)
    return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

inline Rational pow(const Rational& base, std::size_t e) {
  Rational out = 1;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return out;
}

} // namespace jkron
