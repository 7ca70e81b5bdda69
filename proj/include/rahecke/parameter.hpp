#pragma once

// Multi-parameters q = (q_s) and sign patterns eps in {-1, +1}^S.  In the
// right-angled case no two generators are conjugate, so q is just one
// positive rational per generator.

#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rahecke/coxeter.hpp"
#include "rahecke/error.hpp"
#include "rahecke/rational.hpp"

namespace rahecke {

class SignPattern {
 public:
  SignPattern() = default;
  explicit SignPattern(std::vector<int> eps) : eps_(std::move(eps)) {
    for (int e : eps_)
      if (e != 1 && e != -1) throw ValidationError("sign pattern entries must be +1 or -1");
  }
  static SignPattern all_plus(int rank) { return SignPattern(std::vector<int>(rank, 1)); }
  static SignPattern all_minus(int rank) { return SignPattern(std::vector<int>(rank, -1)); }
  /// Bit s of `mask` set means eps_s = -1.
  static SignPattern from_mask(int rank, std::uint64_t mask) {
    std::vector<int> e(rank);
    for (int s = 0; s < rank; ++s) e[s] = ((mask >> s) & 1U) ? -1 : 1;
    return SignPattern(std::move(e));
  }
  /// "+-+" style, one character per generator.
  static SignPattern parse(std::string_view text, int rank) {
    if (static_cast<int>(text.size()) != rank)
      throw ValidationError("sign pattern '" + std::string(text) + "' must have one sign per generator");
    std::vector<int> e;
    for (char c : text) {
      if (c == '+') e.push_back(1);
      else if (c == '-') e.push_back(-1);
      else throw ValidationError("sign pattern characters must be '+' or '-'");
    }
    return SignPattern(std::move(e));
  }

  int rank() const { return static_cast<int>(eps_.size()); }
  int operator[](Gen s) const { return eps_.at(s); }
  std::uint64_t mask() const {
    std::uint64_t m = 0;
    for (int s = 0; s < rank(); ++s)
      if (eps_[s] < 0) m |= std::uint64_t{1} << s;
    return m;
  }
  /// eps_w = product of eps over the letters of w.
  int sign_of(const Elem& w) const {
    int sign = 1;
    for (int i = 0; i < w.length(); ++i) sign *= eps_[w.letter(i)];
    return sign;
  }
  bool all_positive() const { return mask() == 0; }
  std::string str() const {
    std::string out;
    for (int e : eps_) out.push_back(e > 0 ? '+' : '-');
    return out;
  }
  friend bool operator==(const SignPattern&, const SignPattern&) = default;

 private:
  std::vector<int> eps_;
};

class MultiParameter {
 public:
  MultiParameter() = default;
  explicit MultiParameter(std::vector<Rational> q) : q_(std::move(q)) {
    for (const auto& x : q_)
      if (x <= 0) throw ValidationError("parameter values must be positive, got " + to_string(x));
    std::vector<Rational> r;
    for (const auto& x : q_) {
      auto s = exact_sqrt(x);
      if (!s) break;
      r.push_back(*s);
    }
    if (r.size() == q_.size()) root_ = std::move(r);
  }

  static MultiParameter uniform(int rank, const Rational& q) { return MultiParameter(std::vector<Rational>(rank, q)); }

  /// "a=1/4,b=0.6" or "all=1/4"; every generator must receive a value.
  static MultiParameter parse(const CoxeterDiagram& d, std::string_view text) {
    std::vector<std::optional<Rational>> vals(d.rank());
    std::string s(text);
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      auto eq = item.find('=');
      if (eq == std::string::npos) throw ValidationError("parameter assignment '" + item + "' lacks '='");
      std::string name = item.substr(0, eq);
      Rational v = parse_rational(item.substr(eq + 1));
      if (name == "all" && !d.has_gen("all")) {
        for (auto& x : vals) x = v;
      } else {
        vals[d.gen(name)] = v;
      }
    }
    std::vector<Rational> q;
    for (Gen g = 0; g < d.rank(); ++g) {
      if (!vals[g]) throw ValidationError("no parameter value for generator '" + d.name(g) + "'");
      q.push_back(*vals[g]);
    }
    return MultiParameter(std::move(q));
  }

  int rank() const { return static_cast<int>(q_.size()); }
  const std::vector<Rational>& values() const { return q_; }
  const Rational& q(Gen s) const { return q_.at(s); }

  /// All q_s are squares of rationals, so sqrt(q) stays in Q.
  bool exact() const { return root_.has_value(); }
  const Rational& r(Gen s) const {
    require_exact();
    return root_->at(s);
  }

  /// q_w over a reduced word (independent of the word chosen).
  Rational q_w(const Elem& w) const {
    Rational v(1);
    for (int i = 0; i < w.length(); ++i) v *= q_[w.letter(i)];
    return v;
  }

  /// p_s(q) = q_s^{-1/2} (q_s - 1).
  Rational p(Gen s) const { return (q(s) - 1) / r(s); }
  double p_float(Gen s) const { return (q(s).get_d() - 1) / std::sqrt(q(s).get_d()); }

  /// (q_s^{eps_s})_s, i.e. |q_eps|.
  MultiParameter flipped(const SignPattern& eps) const {
    check_rank(eps);
    std::vector<Rational> out;
    for (Gen s = 0; s < rank(); ++s) out.push_back(eps[s] > 0 ? q_[s] : Rational(1) / q_[s]);
    return MultiParameter(std::move(out));
  }

  /// q_{w,eps} = prod eps_s q_s^{eps_s}.
  Rational q_w_eps(const Elem& w, const SignPattern& eps) const {
    check_rank(eps);
    Rational v(1);
    for (int i = 0; i < w.length(); ++i) {
      Gen s = w.letter(i);
      v *= eps[s] > 0 ? q_[s] : -Rational(1) / q_[s];
    }
    return v;
  }

  /// (sqrt q)_{w,eps} = prod eps_s q_s^{eps_s / 2}.
  Rational sqrt_q_w_eps(const Elem& w, const SignPattern& eps) const {
    check_rank(eps);
    Rational v(1);
    for (int i = 0; i < w.length(); ++i) {
      Gen s = w.letter(i);
      v *= eps[s] > 0 ? r(s) : -Rational(1) / r(s);
    }
    return v;
  }

  MultiParameter scaled(const Rational& t) const {
    std::vector<Rational> out = q_;
    for (auto& x : out) x *= t;
    return MultiParameter(std::move(out));
  }

  nlohmann::json to_json(const CoxeterDiagram& d) const {
    nlohmann::json j = nlohmann::json::object();
    for (Gen s = 0; s < rank(); ++s) j[d.name(s)] = to_string(q_[s]);
    return j;
  }

  friend bool operator==(const MultiParameter& a, const MultiParameter& b) { return a.q_ == b.q_; }

 private:
  void require_exact() const {
    if (!root_) throw ValidationError("exact mode needs every q_s to be the square of a rational");
  }
  void check_rank(const SignPattern& eps) const {
    if (eps.rank() != rank()) throw ValidationError("sign pattern rank does not match parameter rank");
  }
  std::vector<Rational> q_;
  std::optional<std::vector<Rational>> root_;
};

}  // namespace rahecke
