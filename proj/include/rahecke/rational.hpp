#pragma once

// Helpers around GMP rationals: exact parsing of "p/q" and decimal literals,
// canonical printing, square roots of perfect squares, dyadic rounding.

#include <gmpxx.h>

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "rahecke/error.hpp"

namespace rahecke {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "p/q", "-p/q" or a decimal literal such as "0.6" or "-1.25e-3"
/// into an exact rational.  Never goes through binary floating point.
inline Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ValidationError("empty rational literal");

  auto bad = [&] { return ValidationError("malformed rational literal '" + std::string(text) + "'"); };

  if (auto slash = s.find('/'); slash != std::string::npos) {
    Integer num, den;
    if (num.set_str(s.substr(0, slash), 10) != 0 || den.set_str(s.substr(slash + 1), 10) != 0) throw bad();
    if (den == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_point = false, seen_digit = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) ++scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw bad();
  long exponent = 0;
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') throw bad();
    std::string rest = s.substr(pos + 1);
    if (rest.empty()) throw bad();
    try {
      std::size_t used = 0;
      exponent = std::stol(rest, &used);
      if (used != rest.size()) throw bad();
    } catch (const std::logic_error&) {
      throw bad();
    }
  }
  Integer num(digits, 10);
  if (negative) num = -num;
  long shift = exponent - scale;
  Integer ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  Rational r = shift >= 0 ? Rational(num * ten_pow) : Rational(num, ten_pow);
  r.canonicalize();
  return r;
}

/// Canonical "p/q" form; integers print as "p/1" so every rational in a
/// report has the same shape.
inline std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::optional<Integer> exact_isqrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

/// Positive rational square root if `r` is the square of a rational.
inline std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  auto num = exact_isqrt(r.get_num());
  auto den = exact_isqrt(r.get_den());
  if (!num || !den) return std::nullopt;
  Rational out(*num, *den);
  out.canonicalize();
  return out;
}

/// 2^k as a rational, k may be negative.
inline Rational pow2(long k) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k < 0 ? -k : k));
  return k >= 0 ? Rational(p) : Rational(Integer(1), p);
}

/// Largest multiple of 2^-bits that is <= x.
inline Rational dyadic_floor(const Rational& x, long bits) {
  Rational scaled = x * pow2(bits);
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Rational r(f);
  return r * pow2(-bits);
}

/// Smallest multiple of 2^-bits that is >= x.
inline Rational dyadic_ceil(const Rational& x, long bits) {
  Rational scaled = x * pow2(bits);
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Rational r(c);
  return r * pow2(-bits);
}

inline Rational rational_pow(const Rational& base, unsigned long e) {
  Rational out(1);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  out = Rational(num, den);
  out.canonicalize();
  return out;
}

}  // namespace rahecke
