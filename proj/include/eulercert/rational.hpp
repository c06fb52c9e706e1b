#pragma once

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace eulercert {

// mpq_class keeps every value canonical (reduced, positive denominator)
// as long as construction goes through parse_rational / integer literals.
using Rational = mpq_class;

Rational parse_rational(std::string_view text);

// Accepts "p/q", integers and finite decimals ("0.25", "-1.5e-3").
Rational parse_number(std::string_view text);

std::string to_string(const Rational& q);

// Smallest double >= q.
double upper_double(const Rational& q);
// Largest double <= q.
double lower_double(const Rational& q);

// Upward-rounded decimal with exactly `places` digits after the point.
std::string decimal_up(const Rational& q, int places = 12);
std::string decimal_up(double value, int places = 12);

// Rational square root when q is the square of a rational.
bool exact_sqrt(const Rational& q, Rational& root);

// Smallest double s with s*s >= q (q >= 0), checked in exact arithmetic.
double sqrt_upper(const Rational& q);

// a + b rounded toward +infinity.
double add_up(double a, double b);
double div_up(double a, double b);

inline std::strong_ordering compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

inline Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace eulercert
