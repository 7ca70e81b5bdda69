#pragma once

// Arithmetic in the Hecke algebra C_q[W] of a right-angled Coxeter system.
//
//   T_s T_w = T_{sw}                  if s is not a left descent of w
//   T_s T_w = T_{sw} + p_s(q) T_w     if s is a left descent of w
//
// Scalars are either exact rationals (every q_s must then be a rational
// square so that p_s(q) = (q_s - 1) / sqrt(q_s) is rational) or doubles.

#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "json.hpp"
#include "rahecke/ball.hpp"
#include "rahecke/coxeter.hpp"
#include "rahecke/error.hpp"
#include "rahecke/growth.hpp"
#include "rahecke/parameter.hpp"
#include "rahecke/rational.hpp"

namespace rahecke {

template <class S>
struct Scalar;

template <>
struct Scalar<Rational> {
  static Rational from(const Rational& r) { return r; }
  static bool is_zero(const Rational& x) { return x == 0; }
  static double to_double(const Rational& x) { return x.get_d(); }
  static nlohmann::json json(const Rational& x) { return to_string(x); }
  static std::string str(const Rational& x) { return to_string(x); }
};

template <>
struct Scalar<double> {
  static double from(const Rational& r) { return r.get_d(); }
  static bool is_zero(double x) { return x == 0.0; }
  static double to_double(double x) { return x; }
  static nlohmann::json json(double x) { return x; }
  static std::string str(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
  }
};

/// Diagram plus parameter, with p_s and sqrt(q_s) cached in the scalar type.
template <class S>
class HeckeAlgebra {
 public:
  HeckeAlgebra(CoxeterDiagram d, MultiParameter q) : d_(std::move(d)), q_(std::move(q)) {
    if (q_.rank() != d_.rank()) throw ValidationError("parameter rank does not match diagram rank");
    for (Gen s = 0; s < d_.rank(); ++s) {
      if constexpr (std::is_same_v<S, Rational>) {
        r_.push_back(q_.r(s));
        p_.push_back(q_.p(s));
      } else {
        double qs = q_.q(s).get_d();
        r_.push_back(std::sqrt(qs));
        p_.push_back((qs - 1) / std::sqrt(qs));
      }
    }
  }

  static std::shared_ptr<const HeckeAlgebra> make(CoxeterDiagram d, MultiParameter q) {
    return std::make_shared<const HeckeAlgebra>(std::move(d), std::move(q));
  }

  const CoxeterDiagram& diagram() const { return d_; }
  const MultiParameter& param() const { return q_; }
  const S& p(Gen s) const { return p_[s]; }
  const S& r(Gen s) const { return r_[s]; }

  bool same_as(const HeckeAlgebra& o) const { return this == &o || (d_ == o.d_ && q_ == o.q_); }

 private:
  CoxeterDiagram d_;
  MultiParameter q_;
  std::vector<S> r_, p_;
};

template <class S>
using AlgebraPtr = std::shared_ptr<const HeckeAlgebra<S>>;

template <class S>
class HeckeElement {
 public:
  using Terms = std::map<Elem, S>;

  explicit HeckeElement(AlgebraPtr<S> alg) : alg_(std::move(alg)) {}
  HeckeElement(AlgebraPtr<S> alg, Terms terms) : alg_(std::move(alg)), terms_(std::move(terms)) { prune(); }

  static HeckeElement basis(AlgebraPtr<S> alg, const Elem& w, S c = S(1)) {
    HeckeElement x(std::move(alg));
    x.add_term(w, c);
    return x;
  }
  static HeckeElement one(AlgebraPtr<S> alg) { return basis(std::move(alg), Elem()); }

  const AlgebraPtr<S>& algebra() const { return alg_; }
  const CoxeterDiagram& diagram() const { return alg_->diagram(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  S coeff(const Elem& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? S(0) : it->second;
  }

  void add_term(const Elem& w, const S& c) {
    if (Scalar<S>::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (Scalar<S>::is_zero(it->second)) terms_.erase(it);
  }

  /// Largest |w| in the support, 0 for the zero element.
  int max_length() const {
    int m = 0;
    for (const auto& [w, c] : terms_) m = std::max(m, w.length());
    return m;
  }

  HeckeElement& operator+=(const HeckeElement& o) {
    check_same(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  HeckeElement& operator-=(const HeckeElement& o) {
    check_same(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const S& k, const HeckeElement& a) {
    HeckeElement out(a.alg_);
    for (const auto& [w, c] : a.terms_) out.add_term(w, k * c);
    return out;
  }
  friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
    return a.alg_->same_as(*b.alg_) && a.terms_ == b.terms_;
  }

  void check_same(const HeckeElement& o) const {
    if (!alg_->same_as(*o.alg_)) throw ValidationError("Hecke elements over different algebras (parameter mismatch)");
  }

 private:
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = Scalar<S>::is_zero(it->second) ? terms_.erase(it) : std::next(it);
  }
  AlgebraPtr<S> alg_;
  Terms terms_;
};

/// T_s * x.
template <class S>
HeckeElement<S> mul_generator(Gen s, const HeckeElement<S>& x) {
  const auto& d = x.diagram();
  HeckeElement<S> out(x.algebra());
  for (const auto& [w, c] : x.terms()) {
    Elem sw = multiply_left(d, s, w);
    out.add_term(sw, c);
    if (sw.length() < w.length()) out.add_term(w, x.algebra()->p(s) * c);
  }
  return out;
}

/// T_v * x, expanding the reduced word of v from the right.
template <class S>
HeckeElement<S> mul_basis(const Elem& v, const HeckeElement<S>& x) {
  HeckeElement<S> acc = x;
  for (int i = v.length(); i-- > 0;) acc = mul_generator(v.letter(i), acc);
  return acc;
}

template <class S>
HeckeElement<S> mul(const HeckeElement<S>& a, const HeckeElement<S>& b) {
  a.check_same(b);
  HeckeElement<S> out(a.algebra());
  for (const auto& [v, c] : a.terms()) out += c * mul_basis(v, b);
  return out;
}

/// Coefficients are real, so only the basis indices are inverted.
template <class S>
HeckeElement<S> adjoint(const HeckeElement<S>& a) {
  HeckeElement<S> out(a.algebra());
  for (const auto& [w, c] : a.terms()) out.add_term(inverse(a.diagram(), w), c);
  return out;
}

/// tau_q: coefficient of T_e.
template <class S>
S trace(const HeckeElement<S>& a) {
  return a.coeff(Elem());
}

/// <a, b> = tau(b* a) = sum_w a_w b_w, since T_w delta_e = delta_w.
template <class S>
S l2_inner(const HeckeElement<S>& a, const HeckeElement<S>& b) {
  a.check_same(b);
  S sum(0);
  for (const auto& [w, c] : a.terms()) {
    auto it = b.terms().find(w);
    if (it != b.terms().end()) sum += c * it->second;
  }
  return sum;
}

template <class S>
S l2_norm_sq(const HeckeElement<S>& a) {
  return l2_inner(a, a);
}

template <class S>
double l2_norm(const HeckeElement<S>& a) {
  return std::sqrt(Scalar<S>::to_double(l2_norm_sq(a)));
}

/// Image under T_s^(q) -> eps_s T_s^(q'), q' = (q_s^{eps_s}).
template <class S>
HeckeElement<S> flip_parameters(const HeckeElement<S>& a, const SignPattern& eps) {
  const auto& alg = *a.algebra();
  auto target = HeckeAlgebra<S>::make(alg.diagram(), alg.param().flipped(eps));
  HeckeElement<S> out(target);
  for (const auto& [w, c] : a.terms()) out.add_term(w, S(eps.sign_of(w)) * c);
  return out;
}

/// chi_{q_eps}(T_s) = eps_s q_s^{eps_s / 2}, extended multiplicatively over
/// reduced words and linearly.
template <class S>
S char_value(const SignPattern& eps, const HeckeElement<S>& a) {
  const auto& alg = *a.algebra();
  if (eps.rank() != alg.diagram().rank()) throw ValidationError("sign pattern rank does not match diagram rank");
  S sum(0);
  for (const auto& [w, c] : a.terms()) {
    S v = c;
    for (int i = 0; i < w.length(); ++i) {
      Gen s = w.letter(i);
      v *= eps[s] > 0 ? alg.r(s) : S(-1) / alg.r(s);
    }
    sum += v;
  }
  return sum;
}

/// E^(i) = (1 / W(|q_eps|)) sum_{|w| <= i} (sqrt q)_{w,eps} T_w.  Refused
/// unless rho(|q_eps|) < 1, where W(|q_eps|) is a convergent series.
inline HeckeElement<Rational> central_projection_partial(const AlgebraPtr<Rational>& alg, const SignPattern& eps,
                                                         int cutoff, std::size_t cap = kDefaultBallCap) {
  const auto& d = alg->diagram();
  MultiParameter abs_q = alg->param().flipped(eps);
  if (region_membership(d, abs_q) != Region::Interior)
    throw ValidationError("central projection for pattern " + eps.str() +
                          " needs rho(|q_eps|) < 1; the normalizing growth series diverges");
  if (cutoff < 0) throw ValidationError("cutoff must be >= 0");
  Rational inv_w = growth_reciprocal(d, abs_q);
  HeckeElement<Rational> out(alg);
  std::size_t count = 0;
  for_each_normal_form(d, cutoff, [&](const std::string& raw) {
    if (++count > cap) throw ResourceError("central projection support exceeds the element cap");
    Elem w = Elem::from_canonical(raw);
    out.add_term(w, inv_w * alg->param().sqrt_q_w_eps(w, eps));
  });
  return out;
}

/// One triple (w', Gamma, w'') of the Cliq decomposition.
struct CliqTerm {
  Elem left;
  GenMask gamma = 0;
  Elem right;
  friend bool operator==(const CliqTerm&, const CliqTerm&) = default;
};

inline Elem clique_elem(const CoxeterDiagram& d, GenMask gamma) {
  std::vector<Gen> letters;
  for (Gen s = 0; s < d.rank(); ++s)
    if ((gamma >> s) & 1U) letters.push_back(s);
  return normal_form(d, letters);
}

/// All triples with w = w' (prod Gamma) w'', lengths adding up, and
/// |w' t| > |w'| for every t commuting with all of Gamma.
inline std::vector<CliqTerm> cliq_decomposition(const CoxeterDiagram& d, const Elem& w) {
  std::vector<CliqTerm> out;
  for (const Elem& w1 : prefixes(d, w)) {
    Elem rest = multiply(d, inverse(d, w1), w);
    GenMask desc = left_descents(d, rest);
    GenMask w1_right = right_descents(d, w1);
    // Enumerate subsets of the left descents of rest; these pairwise commute.
    for (GenMask gamma = desc;; gamma = (gamma - 1) & desc) {
      GenMask centralizing = d.all_mask();
      for (Gen s = 0; s < d.rank(); ++s)
        if ((gamma >> s) & 1U) centralizing &= d.commute_mask(s);
      if ((w1_right & centralizing) == 0) {
        Elem g = clique_elem(d, gamma);
        out.push_back(CliqTerm{w1, gamma, multiply(d, g, rest)});
      }
      if (gamma == 0) break;
    }
  }
  std::sort(out.begin(), out.end(), [](const CliqTerm& a, const CliqTerm& b) {
    if (a.left != b.left) return a.left < b.left;
    if (a.gamma != b.gamma) return std::popcount(a.gamma) != std::popcount(b.gamma)
                                       ? std::popcount(a.gamma) < std::popcount(b.gamma)
                                       : a.gamma < b.gamma;
    return a.right < b.right;
  });
  return out;
}

/// prod_{s in Gamma} p_s(q).
template <class S>
S cliq_coefficient(const HeckeAlgebra<S>& alg, GenMask gamma) {
  S c(1);
  for (Gen s = 0; s < alg.diagram().rank(); ++s)
    if ((gamma >> s) & 1U) c *= alg.p(s);
  return c;
}

// ---------------------------------------------------------------------------
// Text form: "1*T(e) - 3/2*T(a) + T(ab)".

template <class S>
std::string format_element(const HeckeElement<S>& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : a.terms()) {
    std::string cs = Scalar<S>::str(c);
    bool negative = !cs.empty() && cs[0] == '-';
    if (negative) cs = cs.substr(1);
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    out += cs + "*T(" + format_elem(a.diagram(), w) + ")";
    first = false;
  }
  return out;
}

template <class S>
HeckeElement<S> parse_element(const AlgebraPtr<S>& alg, std::string_view text) {
  HeckeElement<S> out(alg);
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty() || s == "0") return out;
  std::size_t pos = 0;
  auto bad = [&](const std::string& why) { return ValidationError("malformed element '" + std::string(text) + "': " + why); };
  while (pos < s.size()) {
    int sign = 1;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -sign;
      ++pos;
    }
    std::size_t t = s.find("T(", pos);
    if (t == std::string::npos) throw bad("expected T(...)");
    Rational coef(1);
    if (t > pos) {
      std::string cs = s.substr(pos, t - pos);
      if (cs.back() != '*') throw bad("expected '*' before T(");
      cs.pop_back();
      coef = parse_rational(cs);
    }
    std::size_t close = s.find(')', t);
    if (close == std::string::npos) throw bad("unclosed T(");
    Elem w = parse_elem(alg->diagram(), s.substr(t + 2, close - t - 2));
    out.add_term(w, Scalar<S>::from(Rational(sign) * coef));
    pos = close + 1;
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-') throw bad("expected '+' or '-' between terms");
  }
  return out;
}

/// Coefficient list in (length, ShortLex) order.
template <class S>
nlohmann::json element_json(const HeckeElement<S>& a) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [w, c] : a.terms()) arr.push_back({format_elem(a.diagram(), w), Scalar<S>::json(c)});
  return arr;
}

}  // namespace rahecke
