#pragma once

// Operator identity checks on truncated balls and the numerical suites built
// on them.  Every identity is compared on exactness domains only.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "rahecke/ball.hpp"
#include "rahecke/coxeter.hpp"
#include "rahecke/hecke.hpp"
#include "rahecke/operator.hpp"

namespace rahecke {

struct CheckResult {
  bool pass = true;
  int cases = 0;
  int failures = 0;
  double max_residual = 0;
  nlohmann::json details = nlohmann::json::array();

  void record(bool ok, double residual, nlohmann::json detail) {
    ++cases;
    max_residual = std::max(max_residual, residual);
    if (!ok) {
      ++failures;
      pass = false;
      if (details.size() < 20) details.push_back(std::move(detail));
    }
  }

  nlohmann::json to_json() const {
    return {{"pass", pass}, {"cases", cases}, {"failures", failures}, {"max_residual", max_residual},
            {"failed_cases", details}};
  }
};

inline std::vector<Elem> elements_up_to(const Ball& ball, int len) {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < ball.ball_size(len); ++i) out.push_back(ball.elem(i));
  return out;
}

/// Expected value of s.P_w from the three cases of the action formula.
template <class S>
TruncatedOperator<S> expected_action(const BallPtr& ball, Gen s, const Elem& w) {
  const auto& d = ball->diagram();
  Elem sw = multiply_left(d, s, w);
  if (!centralizes(d, s, w)) return proj_P<S>(ball, sw);
  if (is_left_descent(d, s, w)) return proj_P<S>(ball, sw) - proj_P<S>(ball, w);
  return proj_P<S>(ball, w);
}

/// s.P_w against the action formula for every generator s and |w| <= max_len.
inline CheckResult action_suite(const BallPtr& ball, int max_len) {
  const auto& d = ball->diagram();
  CheckResult out;
  for (const Elem& w : elements_up_to(*ball, max_len)) {
    auto pw = proj_P<Rational>(ball, w);
    for (Gen s = 0; s < d.rank(); ++s) {
      auto lhs = conjugate_action(generator(d, s), pw);
      auto rhs = expected_action<Rational>(ball, s, w);
      bool ok = lhs.equal_on_domain(rhs) && lhs.exactness_radius() >= 0;
      out.record(ok, lhs.residual(rhs), {{"s", d.name(s)}, {"w", format_elem(d, w)}});
    }
  }
  return out;
}

/// T_s (1 - P_s) T_s = P_s for all s, and T_s P_w T_s = P_{sw} whenever w is
/// not centralized by s and s is not <= w.
inline CheckResult projection_suite(const BallPtr& ball, const AlgebraPtr<Rational>& alg, int max_len) {
  const auto& d = ball->diagram();
  CheckResult out;
  auto one = TruncatedOperator<Rational>::identity(ball);
  for (Gen s = 0; s < d.rank(); ++s) {
    Elem gs = generator(d, s);
    auto ts = rep_hecke(ball, HeckeElement<Rational>::basis(alg, gs));
    auto ps = proj_P<Rational>(ball, gs);
    auto lhs = ts * (one - ps) * ts;
    out.record(lhs.equal_on_domain(ps), lhs.residual(ps), {{"identity", "complement"}, {"s", d.name(s)}});
    for (const Elem& w : elements_up_to(*ball, max_len)) {
      if (centralizes(d, s, w) || is_left_descent(d, s, w)) continue;
      auto l2 = ts * proj_P<Rational>(ball, w) * ts;
      auto r2 = proj_P<Rational>(ball, multiply_left(d, s, w));
      out.record(l2.equal_on_domain(r2), l2.residual(r2),
                 {{"identity", "conjugate"}, {"s", d.name(s)}, {"w", format_elem(d, w)}});
    }
  }
  return out;
}

/// Right-hand side of the Cliq decomposition of T_w as an operator.
template <class S>
TruncatedOperator<S> cliq_operator(const BallPtr& ball, const HeckeAlgebra<S>& alg, const Elem& w) {
  const auto& d = ball->diagram();
  auto sum = TruncatedOperator<S>::zero(ball);
  for (const auto& t : cliq_decomposition(d, w)) {
    auto term = rep_group<S>(ball, t.left) * proj_P<S>(ball, clique_elem(d, t.gamma)) * rep_group<S>(ball, t.right);
    sum = sum + cliq_coefficient(alg, t.gamma) * term;
  }
  return sum;
}

/// Largest entrywise residual of T_w^(q) = sum (prod p) T_{w'}^(1) P_Gamma
/// T_{w''}^(1) on the exactness domain; exact rationals, so 0 iff equal.
inline double verify_cliq_identity(const BallPtr& ball, const AlgebraPtr<Rational>& alg, const Elem& w) {
  if (ball->radius() < w.length() + 2) throw ValidationError("ball too small: need radius >= |w| + 2");
  auto lhs = rep_hecke(ball, HeckeElement<Rational>::basis(alg, w));
  auto rhs = cliq_operator(ball, *alg, w);
  return lhs.residual(rhs);
}

struct CorollarySplit {
  double residual = 0;
  int x_terms = 0;
  int exactness_radius = 0;
  TruncatedOperator<Rational> x;
};

/// T_{g^l}^(q) = T_{g^l}^(1) + P_{s_1} x with
/// x = sum_i p_{t_i} P_{t_1...t_i} T^(1)_{t_1...t_i-hat...t_m}, where
/// t_1...t_m is the word of g repeated l times.
inline CorollarySplit verify_corollary_split(const BallPtr& ball, const AlgebraPtr<Rational>& alg, const Elem& g,
                                             int l) {
  const auto& d = ball->diagram();
  std::vector<Gen> t;
  for (int k = 0; k < l; ++k)
    for (int i = 0; i < g.length(); ++i) t.push_back(g.letter(i));
  const int m = static_cast<int>(t.size());
  if (ball->radius() < m + 2) throw ValidationError("ball too small: need radius >= l|g| + 2");
  Elem gl = normal_form(d, t);
  auto x = TruncatedOperator<Rational>::zero(ball);
  int terms = 0;
  for (int i = 0; i < m; ++i) {
    std::vector<Gen> head(t.begin(), t.begin() + i + 1);
    std::vector<Gen> hat = t;
    hat.erase(hat.begin() + i);
    auto term = proj_P<Rational>(ball, normal_form(d, head)) * rep_group<Rational>(ball, normal_form(d, hat));
    x = x + alg->p(t[i]) * term;
    if (alg->p(t[i]) != 0) ++terms;
  }
  auto lhs = rep_hecke(ball, HeckeElement<Rational>::basis(alg, gl));
  auto rhs = rep_group<Rational>(ball, gl) + proj_P<Rational>(ball, generator(d, t.front())) * x;
  CorollarySplit out{lhs.residual(rhs), terms,
                     std::min(lhs.exactness_radius(), rhs.exactness_radius()), x};
  return out;
}

/// P_v P_w = P_{v v w} (0 if the join is absent) for all v, w of length <= len.
inline CheckResult join_suite(const BallPtr& ball, int len) {
  const auto& d = ball->diagram();
  auto elems = elements_up_to(*ball, len);
  std::vector<TruncatedOperator<Rational>> proj;
  for (const auto& w : elems) proj.push_back(proj_P<Rational>(ball, w));
  auto zero = TruncatedOperator<Rational>::zero(ball);
  CheckResult out;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      auto lhs = proj[i] * proj[j];
      auto jn = join(d, elems[i], elems[j]);
      bool ok;
      if (jn) {
        auto it = ball->find(*jn);
        ok = lhs.equal_on_domain(it && *it < proj.size() ? proj[*it] : proj_P<Rational>(ball, *jn));
      } else {
        ok = lhs.equal_on_domain(zero);
      }
      out.record(ok, ok ? 0.0 : 1.0, {{"v", format_elem(d, elems[i])}, {"w", format_elem(d, elems[j])}});
    }
  return out;
}

struct PositivityWindow {
  double lo = 0, hi = 0;
  Rational bound_lo, bound_hi;
  /// Float spectra inside [bound_lo - tol, bound_hi + tol].
  bool within = false;
  /// Exact semidefiniteness of X - bound_lo and bound_hi - X (exact mode).
  std::optional<bool> exact_within;
  std::size_t dimension = 0;
};

/// Spectrum of the compression of (T_w)* T_w to its exactness domain against
/// prod min{q^{+-1}} and prod max{q^{+-1}}.
template <class S>
PositivityWindow positivity_window(const BallPtr& ball, const AlgebraPtr<S>& alg, const Elem& w, double tol = 1e-9) {
  if (ball->radius() < 2 * w.length()) throw ValidationError("ball too small: need radius >= 2|w|");
  const auto& d = ball->diagram();
  auto tw = HeckeElement<S>::basis(alg, w);
  auto y = rep_hecke(ball, adjoint(tw)) * rep_hecke(ball, tw);
  PositivityWindow out;
  out.bound_lo = 1;
  out.bound_hi = 1;
  for (int i = 0; i < w.length(); ++i) {
    const Rational& q = alg->param().q(w.letter(i));
    Rational inv = Rational(1) / q;
    out.bound_lo *= std::min(q, inv);
    out.bound_hi *= std::max(q, inv);
  }
  auto sb = spectrum_bounds(y);
  out.lo = sb.min;
  out.hi = sb.max;
  out.dimension = y.domain_size();
  out.within = out.lo >= out.bound_lo.get_d() - tol && out.hi <= out.bound_hi.get_d() + tol;
  if constexpr (std::is_same_v<S, Rational>) {
    auto block = y.domain_block();
    auto lower = block, upper = block;
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = 0; j < block.size(); ++j) upper[i][j] = -block[i][j];
      lower[i][i] -= out.bound_lo;
      upper[i][i] += out.bound_hi;
    }
    out.exact_within = is_psd(lower) && is_psd(upper);
  }
  (void)d;
  return out;
}

enum class Sampling { Signed, Nonnegative };

/// Deterministic coefficient stream in [-1, 1), or [0, 1) when nonnegative.
class CoefficientStream {
 public:
  explicit CoefficientStream(std::uint64_t seed, Sampling mode = Sampling::Signed) : rng_(seed), mode_(mode) {}
  double next() {
    double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    return mode_ == Sampling::Signed ? 2.0 * u - 1.0 : u;
  }

 private:
  std::mt19937_64 rng_;
  Sampling mode_;
};

struct HaagerupResult {
  int l = 0;
  int radius = 0;
  double max_ratio = 0;
  std::vector<double> ratios;
  nlohmann::json to_json() const { return {{"l", l}, {"radius", radius}, {"max_ratio", max_ratio}, {"ratios", ratios}}; }
};

/// Per column v with |v| <= n - l: the contributions (word, row, value) of
/// T_w delta_v for every |w| = l.  Independent of the coefficients.
struct SphereColumns {
  std::size_t sphere_begin = 0, sphere_size = 0;
  std::vector<std::vector<std::tuple<std::uint32_t, std::uint32_t, double>>> cols;
};

inline SphereColumns sphere_columns(const Ball& ball, const HeckeAlgebra<double>& alg, int l) {
  SphereColumns out;
  out.sphere_begin = ball.sphere_begin(l);
  out.sphere_size = ball.sphere_end(l) - out.sphere_begin;
  const std::size_t nodes = ball.ball_size(l);
  std::vector<std::size_t> parent(nodes, 0);
  for (std::size_t k = 1; k < nodes; ++k)
    parent[k] = ball.index(Elem::from_canonical(ball.elem(k).raw().substr(1)));
  const std::size_t ncols = ball.ball_size(ball.radius() - l);
  out.cols.resize(ncols);
  std::vector<detail::Terms<double>> vec(nodes);
  for (std::size_t v = 0; v < ncols; ++v) {
    vec[0].assign(1, {v, 1.0});
    for (std::size_t k = 1; k < nodes; ++k) {
      Gen s = ball.elem(k).first();
      detail::apply_generator(ball, s, alg.p(s), vec[parent[k]], vec[k]);
    }
    for (std::size_t w = out.sphere_begin; w < out.sphere_begin + out.sphere_size; ++w)
      for (const auto& [row, val] : vec[w])
        out.cols[v].emplace_back(static_cast<std::uint32_t>(w - out.sphere_begin), static_cast<std::uint32_t>(row), val);
  }
  return out;
}

/// max over seeded samples of ||x|| / (l ||x||_2) for x = sum_{|w| = l} c_w T_w.
/// ||x|| is the norm of the compression to columns |v| <= n - l, a lower
/// bound for the true norm.
inline HaagerupResult haagerup_ratio(const BallPtr& ball, const AlgebraPtr<double>& alg, int l, int trials,
                                     std::uint64_t seed, Sampling mode = Sampling::Signed) {
  if (l < 1) throw ValidationError("haagerup_ratio needs l >= 1");
  if (ball->radius() < l + 2) throw ValidationError("ball too small: need radius >= l + 2");
  SphereColumns sc = sphere_columns(*ball, *alg, l);
  HaagerupResult out;
  out.l = l;
  out.radius = ball->radius();
  CoefficientStream stream(seed * 1000003ULL + static_cast<std::uint64_t>(l), mode);
  std::vector<double> acc(ball->size(), 0.0);
  std::vector<char> seen(ball->size(), 0);
  std::vector<std::size_t> touched;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<double> c(sc.sphere_size);
    double norm2 = 0;
    for (double& x : c) {
      x = stream.next();
      norm2 += x * x;
    }
    SparseColumns x;
    x.rows = ball->size();
    x.cols.resize(sc.cols.size());
    for (std::size_t v = 0; v < sc.cols.size(); ++v) {
      touched.clear();
      for (const auto& [w, row, val] : sc.cols[v]) {
        if (!seen[row]) {
          seen[row] = 1;
          touched.push_back(row);
        }
        acc[row] += c[w] * val;
      }
      std::sort(touched.begin(), touched.end());
      for (std::size_t row : touched) {
        if (acc[row] != 0.0) x.cols[v].emplace_back(row, acc[row]);
        acc[row] = 0.0;
        seen[row] = 0;
      }
    }
    double ratio = power_norm(x) / (l * std::sqrt(norm2));
    out.ratios.push_back(ratio);
    out.max_ratio = std::max(out.max_ratio, ratio);
  }
  return out;
}

}  // namespace rahecke
