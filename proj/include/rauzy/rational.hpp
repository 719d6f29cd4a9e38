#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rauzy {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "3", "-2/7", "0.125", "1e-9", "2.5E+3". The result is exact.
Rational parse_rational(std::string_view text);

// Decimal rendering truncated toward zero after `digits` fractional digits.
std::string to_decimal(const Rational& q, int digits = 12);

// Floor and ceiling of log(q) rendered as decimals; q must be positive.
double log_lower(const Rational& q);
double log_upper(const Rational& q);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace rauzy
