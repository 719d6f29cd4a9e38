#include "rauzy/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <string>

#include "rauzy/error.hpp"

namespace rauzy {

namespace {

Integer parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) fail(ErrorKind::Parse, "bad number: '" + std::string(whole) + "'");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      fail(ErrorKind::Parse, "bad number: '" + std::string(whole) + "'");
  return Integer(std::string(digits), 10);
}

Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(s.substr(0, slash), text);
    Integer den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) fail(ErrorKind::Parse, "zero denominator: '" + std::string(text) + "'");
    out = Rational(num, den);
  } else {
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp.empty() && (exp.front() == '-' || exp.front() == '+')) {
        exp_negative = exp.front() == '-';
        exp.remove_prefix(1);
      }
      Integer ev = parse_integer(exp, text);
      if (ev > 100000) fail(ErrorKind::Parse, "exponent too large: '" + std::string(text) + "'");
      exponent = exp_negative ? -ev.get_si() : ev.get_si();
      s = s.substr(0, e);
    }
    std::string_view int_part = s, frac_part;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      int_part = s.substr(0, dot);
      frac_part = s.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty())
      fail(ErrorKind::Parse, "bad number: '" + std::string(text) + "'");
    Integer mantissa = parse_integer(std::string(int_part.empty() ? "0" : int_part) +
                                         std::string(frac_part),
                                     text);
    exponent -= static_cast<long>(frac_part.size());
    if (exponent >= 0)
      out = Rational(mantissa * pow10(static_cast<unsigned long>(exponent)));
    else
      out = Rational(mantissa, pow10(static_cast<unsigned long>(-exponent)));
  }
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

std::string to_decimal(const Rational& q, int digits) {
  Integer num = abs(q.get_num());
  const Integer& den = q.get_den();
  Integer scaled = num * pow10(static_cast<unsigned long>(digits)) / den;
  std::string s = scaled.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits))
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (q < 0) s.insert(0, "-");
  return s;
}

namespace {

// log(q) = log(num) - log(den), each via mpz_get_d_2exp to survive huge values.
double log_approx(const Rational& q) {
  long en = 0, ed = 0;
  double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return std::log(mn) - std::log(md) + static_cast<double>(en - ed) * std::log(2.0);
}

}  // namespace

double log_lower(const Rational& q) {
  if (q <= 0) fail(ErrorKind::Domain, "log of non-positive value");
  double v = log_approx(q);
  return std::nextafter(std::nextafter(v, -std::numeric_limits<double>::infinity()),
                        -std::numeric_limits<double>::infinity());
}

double log_upper(const Rational& q) {
  if (q <= 0) fail(ErrorKind::Domain, "log of non-positive value");
  double v = log_approx(q);
  return std::nextafter(std::nextafter(v, std::numeric_limits<double>::infinity()),
                        std::numeric_limits<double>::infinity());
}

}  // namespace rauzy
