#include "eulercert/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace eulercert {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  std::string text(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(text, 10);
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  mpz_class num = parse_integer(text.substr(0, slash));
  mpz_class den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_number(std::string_view text) {
  if (text.find('/') != std::string_view::npos) return parse_rational(text);
  std::string_view mant = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mant = text.substr(0, e);
    exponent = parse_integer(text.substr(e + 1)).get_si();
  }
  bool negative = false;
  if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
    negative = mant[0] == '-';
    mant = mant.substr(1);
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (char c : mant) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    }
  }
  if (digits.empty()) throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  Rational q{mpz_class(digits, 10)};
  const long scale = exponent - frac_digits;
  if (scale > 0) q *= Rational(pow10(static_cast<unsigned long>(scale)));
  if (scale < 0) q /= Rational(pow10(static_cast<unsigned long>(-scale)));
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

double upper_double(const Rational& q) {
  double d = q.get_d();  // truncates toward zero
  if (cmp(Rational(d), q) < 0) d = std::nextafter(d, std::numeric_limits<double>::infinity());
  return d;
}

double lower_double(const Rational& q) {
  double d = q.get_d();
  if (cmp(Rational(d), q) > 0) d = std::nextafter(d, -std::numeric_limits<double>::infinity());
  return d;
}

std::string decimal_up(const Rational& q, int places) {
  const mpz_class scale = pow10(static_cast<unsigned long>(places));
  Rational scaled = q * Rational(scale);
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  const bool negative = c < 0;
  mpz_class mag = negative ? mpz_class(-c) : c;
  std::string digits = mag.get_str(10);
  if (digits.size() <= static_cast<std::size_t>(places))
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  return negative ? "-" + digits : digits;
}

std::string decimal_up(double value, int places) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return decimal_up(Rational(value), places);
}

bool exact_sqrt(const Rational& q, Rational& root) {
  if (q < 0) return false;
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Rational(rn, rd);
  root.canonicalize();
  return true;
}

double sqrt_upper(const Rational& q) {
  if (q <= 0) return 0.0;
  double s = std::sqrt(upper_double(q));
  // Walk down while still an upper bound, then up until it is one.
  for (int i = 0; i < 4; ++i) {
    const double lower = std::nextafter(s, 0.0);
    const Rational l(lower);
    if (cmp(l * l, q) >= 0) s = lower; else break;
  }
  for (;;) {
    const Rational r(s);
    if (cmp(r * r, q) >= 0) return s;
    s = std::nextafter(s, std::numeric_limits<double>::infinity());
  }
}

double add_up(double a, double b) {
  const double s = a + b;
  if (std::isinf(s)) return s;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return err > 0 ? std::nextafter(s, std::numeric_limits<double>::infinity()) : s;
}

double div_up(double a, double b) {
  const double q = a / b;
  if (std::isinf(q) || std::isinf(a)) return q;
  if (cmp(Rational(q) * Rational(b), Rational(a)) < 0)
    return std::nextafter(q, std::numeric_limits<double>::infinity());
  return q;
}

}  // namespace eulercert
