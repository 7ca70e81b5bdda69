#pragma once

// Univariate polynomials over Q with Sturm-sequence real root counting and
// dyadic bisection.

#include <algorithm>
#include <optional>
#include <vector>

#include "rahecke/error.hpp"
#include "rahecke/rational.hpp"

namespace rahecke {

class Polynomial {
 public:
  Polynomial() = default;
  /// c[i] is the coefficient of t^i.
  explicit Polynomial(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
  static Polynomial constant(const Rational& a) { return Polynomial({a}); }
  /// a + b t
  static Polynomial linear(const Rational& a, const Rational& b) { return Polynomial({a, b}); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& t) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  double eval(double t) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + it->get_d();
    return acc;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Rational> c = a.c_;
    for (auto& x : c) x = -x;
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Rational& k, const Polynomial& a) {
    std::vector<Rational> c = a.c_;
    for (auto& x : c) x *= k;
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  Polynomial pow(unsigned e) const {
    Polynomial out = constant(1);
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
  }

  Polynomial derivative() const {
    std::vector<Rational> c;
    for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * Rational(static_cast<long>(i)));
    return Polynomial(std::move(c));
  }

  /// Returns (quotient, remainder).
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& b) const {
    if (b.is_zero()) throw Error("polynomial division by zero");
    std::vector<Rational> r = c_;
    int db = b.degree();
    std::vector<Rational> q(std::max(0, degree() - db + 1), Rational(0));
    for (int i = degree(); i >= db; --i) {
      Rational f = r[i] / b.c_[db];
      if (f == 0) continue;
      q[i - db] = f;
      for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.c_[j];
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
  }

  Polynomial monic() const {
    if (is_zero()) return {};
    return (Rational(1) / leading()) * *this;
  }

  /// First n power-series coefficients of this / den (den(0) != 0).
  std::vector<Rational> series_div(const Polynomial& den, int n) const {
    if (den.coeff(0) == 0) throw Error("series division by a polynomial vanishing at 0");
    std::vector<Rational> out;
    Rational inv0 = Rational(1) / den.coeff(0);
    for (int k = 0; k < n; ++k) {
      Rational acc = coeff(k);
      for (int j = 1; j <= std::min(k, den.degree()); ++j) acc -= den.coeff(j) * out[k - j];
      out.push_back(acc * inv0);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// p / gcd(p, p'): same roots, all simple.
inline Polynomial square_free(const Polynomial& p) {
  if (p.degree() <= 0) return p;
  Polynomial g = gcd(p, p.derivative());
  if (g.degree() <= 0) return p;
  return p.divmod(g).first;
}

class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& p) {
    if (p.is_zero()) throw Error("Sturm sequence of the zero polynomial");
    seq_.push_back(p);
    if (p.degree() == 0) return;
    seq_.push_back(p.derivative());
    while (true) {
      Polynomial r = seq_[seq_.size() - 2].divmod(seq_.back()).second;
      if (r.is_zero()) break;
      seq_.push_back(-r);
    }
  }

  int sign_changes(const Rational& t) const {
    int changes = 0, prev = 0;
    for (const auto& f : seq_) {
      int s = sgn(f(t));
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++changes;
      prev = s;
    }
    return changes;
  }

  /// Number of distinct real roots in (a, b], a < b.
  int count(const Rational& a, const Rational& b) const { return sign_changes(a) - sign_changes(b); }

  const std::vector<Polynomial>& polys() const { return seq_; }

 private:
  std::vector<Polynomial> seq_;
};

/// Closed interval with rational (dyadic) endpoints.
struct Interval {
  Rational lo, hi;
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(double x) const { return lo.get_d() <= x && x <= hi.get_d(); }
  Rational width() const { return hi - lo; }
  bool intersects(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Smallest power of two >= 1 + max |a_i / a_n|, an upper bound on |roots|.
inline Rational cauchy_bound(const Polynomial& p) {
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeff(i) / p.leading());
    if (r > m) m = r;
  }
  Rational bound = m + 1;
  Rational b(1);
  while (b < bound) b *= 2;
  return b;
}

/// Isolates the smallest positive real root of p (p(0) != 0) in an interval
/// (lo, hi] of width <= 2^-bits with dyadic endpoints.  If a bisection point
/// hits the root exactly, the interval collapses to that point.  Returns
/// nullopt when p has no positive root.
inline std::optional<Interval> smallest_positive_root(const Polynomial& p, long bits = 64) {
  if (p.is_zero()) throw Error("degenerate polynomial: identically zero");
  if (p.coeff(0) == 0) throw Error("degenerate polynomial: vanishes at 0");
  Polynomial sf = square_free(p);
  if (sf.degree() <= 0) return std::nullopt;
  SturmSequence sturm(sf);
  Rational lo(0), hi = cauchy_bound(sf);
  if (sturm.count(lo, hi) == 0) return std::nullopt;
  Rational eps = pow2(-bits);
  while (hi - lo > eps || lo == 0) {
    Rational mid = (lo + hi) / 2;
    if (sturm.count(lo, mid) > 0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  if (sf(hi) == 0) return Interval{hi, hi};
  return Interval{lo, hi};
}

}  // namespace rahecke
