#pragma once

// Radial part of the Hecke algebra of the free product of n >= 2 involutions
// with a uniform parameter.  S_l denotes the sum of T_w over |w| = l; these
// span a commutative subalgebra with
//
//   S_1 S_0 = S_1
//   S_1 S_1 = S_2 + p S_1 + n S_0
//   S_1 S_l = S_{l+1} + p S_l + (n - 1) S_{l-1}      (l >= 2).
//
// Fixing a generator a, S_l = A_l + B_l where A_l sums over words starting
// with a; then T_a A_l = B_{l-1} + p A_l and T_a B_l = A_{l+1} (B_0 = T_e).
// This is enough to evaluate the central-projection residuals exactly at
// cutoffs far beyond explicit enumeration.

#include <vector>

#include "rahecke/error.hpp"
#include "rahecke/rational.hpp"

namespace rahecke {

class FreeProductRadial {
 public:
  /// Coefficients of S_0, S_1, ...
  using Vec = std::vector<Rational>;
  /// Coefficients of A_l and B_l.
  struct Split {
    Vec a, b;
  };

  FreeProductRadial(int n, Rational p) : n_(n), p_(std::move(p)) {
    if (n < 2) throw ValidationError("radial algebra needs at least two generators");
  }

  int generators() const { return n_; }
  const Rational& p() const { return p_; }

  /// |S_l| = n (n-1)^{l-1}.
  Integer sphere_size(int l) const {
    if (l == 0) return 1;
    Integer m;
    mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(n_ - 1), static_cast<unsigned long>(l - 1));
    return m * n_;
  }
  /// |A_l| = (n-1)^{l-1}.
  Integer a_size(int l) const {
    if (l == 0) return 0;
    Integer m;
    mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(n_ - 1), static_cast<unsigned long>(l - 1));
    return m;
  }
  Integer b_size(int l) const { return sphere_size(l) - a_size(l); }

  Vec mul_s1(const Vec& x) const {
    Vec out(x.size() + 1, Rational(0));
    for (std::size_t l = 0; l < x.size(); ++l) {
      if (x[l] == 0) continue;
      out[l + 1] += x[l];
      if (l == 0) continue;
      out[l] += p_ * x[l];
      out[l - 1] += x[l] * (l == 1 ? n_ : n_ - 1);
    }
    return trimmed(out);
  }

  Vec mul(const Vec& x, const Vec& y) const {
    Vec out;
    Vec prev, cur = y;  // S_{j-1} y, S_j y
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (j > 0) {
        Vec next = mul_s1(cur);
        if (j >= 2) {
          add_scaled(next, cur, -p_);
          add_scaled(next, prev, Rational(-(j == 2 ? n_ : n_ - 1)));
        }
        prev = std::move(cur);
        cur = std::move(next);
      }
      add_scaled(out, cur, x[j]);
    }
    return trimmed(out);
  }

  Rational norm_sq(const Vec& x) const {
    Rational sum(0);
    for (std::size_t l = 0; l < x.size(); ++l) sum += x[l] * x[l] * Rational(sphere_size(static_cast<int>(l)));
    return sum;
  }

  Rational inner(const Vec& x, const Vec& y) const {
    Rational sum(0);
    for (std::size_t l = 0; l < std::min(x.size(), y.size()); ++l)
      sum += x[l] * y[l] * Rational(sphere_size(static_cast<int>(l)));
    return sum;
  }

  Split split(const Vec& x) const { return Split{x, x}; }

  /// T_a applied to a split vector.
  Split mul_ta(const Split& x) const {
    std::size_t len = std::max(x.a.size(), x.b.size()) + 1;
    Split out{Vec(len, Rational(0)), Vec(len, Rational(0))};
    for (std::size_t l = 1; l < x.a.size(); ++l) {
      out.b[l - 1] += x.a[l];
      out.a[l] += p_ * x.a[l];
    }
    for (std::size_t l = 0; l < x.b.size(); ++l) out.a[l + 1] += x.b[l];
    return out;
  }

  Split sub(const Split& x, const Split& y) const {
    Split out = x;
    add_scaled(out.a, y.a, Rational(-1));
    add_scaled(out.b, y.b, Rational(-1));
    return out;
  }

  Rational norm_sq(const Split& x) const {
    Rational sum(0);
    for (std::size_t l = 0; l < x.a.size(); ++l) sum += x.a[l] * x.a[l] * Rational(a_size(static_cast<int>(l)));
    for (std::size_t l = 0; l < x.b.size(); ++l) sum += x.b[l] * x.b[l] * Rational(b_size(static_cast<int>(l)));
    return sum;
  }

  static void add_scaled(Vec& acc, const Vec& x, const Rational& k) {
    if (acc.size() < x.size()) acc.resize(x.size(), Rational(0));
    for (std::size_t i = 0; i < x.size(); ++i) acc[i] += k * x[i];
  }

 private:
  static Vec trimmed(Vec v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
  }
  int n_;
  Rational p_;
};

}  // namespace rahecke
