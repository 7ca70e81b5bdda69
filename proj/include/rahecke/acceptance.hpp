#pragma once

// The acceptance suite: one Criterion per numbered acceptance item.  Shared by
// the acceptance test binary and the `report` subcommand.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "rahecke/ball.hpp"
#include "rahecke/corpus.hpp"
#include "rahecke/growth.hpp"
#include "rahecke/hecke.hpp"
#include "rahecke/operator.hpp"
#include "rahecke/radial.hpp"
#include "rahecke/verify.hpp"

namespace rahecke {

struct Criterion {
  int id = 0;
  std::string title;
  bool pass = true;
  nlohmann::json details = nlohmann::json::object();

  void check(const std::string& name, bool ok) {
    details["checks"][name] = ok;
    pass = pass && ok;
  }

  nlohmann::json to_json() const { return {{"id", id}, {"title", title}, {"pass", pass}, {"details", details}}; }
};

namespace acceptance {

using H = HeckeElement<Rational>;

inline Rational rat(long a, long b = 1) { return make_rational(a, b); }

inline AlgebraPtr<Rational> exact_algebra(const CoxeterDiagram& d, std::vector<Rational> q) {
  return HeckeAlgebra<Rational>::make(d, MultiParameter(std::move(q)));
}

inline H random_element(const AlgebraPtr<Rational>& alg, const Ball& ball, std::mt19937_64& rng, int terms) {
  H x(alg);
  for (int i = 0; i < terms; ++i)
    x.add_term(ball.elem(rng() % ball.size()),
               rat(static_cast<long>(rng() % 9) - 4, static_cast<long>(1 + rng() % 4)));
  return x;
}

/// Exact test lo <= (a + b sqrt5) / c <= hi for c > 0.
inline bool interval_contains_surd(const Interval& i, long a, long b, long c) {
  auto below = [&](const Rational& r) {  // r <= x
    Rational lhs = r * c - a;
    Rational rhs2 = Rational(5 * b * b);
    if (b >= 0) return lhs <= 0 || lhs * lhs <= rhs2;
    return lhs < 0 && lhs * lhs >= rhs2;
  };
  auto above = [&](const Rational& r) {  // r >= x
    Rational lhs = r * c - a;
    Rational rhs2 = Rational(5 * b * b);
    if (b >= 0) return lhs >= 0 && lhs * lhs >= rhs2;
    return lhs >= 0 || lhs * lhs <= rhs2;
  };
  return below(i.lo) && above(i.hi);
}

inline bool has_pattern(const std::vector<SignPattern>& v, const SignPattern& e) {
  return std::find(v.begin(), v.end(), e) != v.end();
}

// ---------------------------------------------------------------------------

inline Criterion classifier_exactness() {
  Criterion c{1, "Classifier exactness"};
  auto verdict = [](const CoxeterDiagram& d, const Rational& q) {
    return classify_simplicity(d, MultiParameter::uniform(d.rank(), q));
  };
  auto dinf = diagrams::d_infinity();
  for (const char* q : {"1/4", "1", "4"}) {
    auto v = verdict(dinf, parse_rational(q));
    c.check(std::string("d_infty q=") + q + " NotSimple", v.status == Verdict::Status::NotSimple);
    bool flagged = has_pattern(v.boundary_flags, SignPattern::all_plus(2));
    c.check(std::string("d_infty q=") + q + " unflipped boundary flag " + (flagged ? "set" : "clear"),
            flagged == (std::string(q) == "1"));
  }
  auto f3 = diagrams::free_product(3);
  for (const char* q : {"0.6", "1", "1.9"})
    c.check(std::string("free3 q=") + q + " Simple", verdict(f3, parse_rational(q)).status == Verdict::Status::Simple);
  for (const char* q : {"0.4", "1/2", "2", "3"}) {
    auto v = verdict(f3, parse_rational(q));
    c.check(std::string("free3 q=") + q + " NotSimple", v.status == Verdict::Status::NotSimple);
    bool boundary = std::string(q) == "1/2" || std::string(q) == "2";
    c.check(std::string("free3 q=") + q + (boundary ? " boundary flagged" : " no boundary flag"),
            v.boundary_flags.empty() != boundary);
  }

  auto c5 = diagrams::pentagon();
  auto pv = verdict(c5, rat(1));
  c.check("pentagon q=1 Simple", pv.status == Verdict::Status::Simple);
  auto pp = pole_and_rho(c5, MultiParameter::uniform(5, rat(1)));
  c.check("pentagon t0 contains (3-sqrt5)/2", pp.t0 && interval_contains_surd(*pp.t0, 3, -1, 2));
  c.check("pentagon t0 width <= 2^-32", pp.t0 && pp.t0->width() <= pow2(-32));
  c.details["pentagon_t0"] = interval_json(*pp.t0);

  auto a = diagrams::diagram_a();
  c.check("diagram A q=1 Simple", verdict(a, rat(1)).status == Verdict::Status::Simple);
  auto pa = pole_and_rho(a, MultiParameter::uniform(3, rat(1)));
  c.check("diagram A t0 contains (sqrt5-1)/2", pa.t0 && interval_contains_surd(*pa.t0, -1, 1, 2));
  c.details["diagram_A_t0"] = interval_json(*pa.t0);

  // Fekete: a_l >= rho^l for every l, so rho_lo^l <= a_l by enumeration.
  bool fekete = true;
  for (const auto& d : {a, c5, f3}) {
    auto pr = pole_and_rho(d, MultiParameter::uniform(d.rank(), rat(1)));
    auto counts = sphere_counts(d, 12);
    for (int l = 1; l <= 12; ++l)
      fekete = fekete && Rational(Integer(std::to_string(counts[l]))) >= rational_pow(pr.rho.lo, l);
  }
  c.check("Fekete lower bounds a_l >= rho^l for l <= 12", fekete);
  return c;
}

inline Criterion growth_oracle() {
  Criterion c{2, "Growth-formula oracle gate"};
  int diagrams_checked = 0;
  bool all = true;
  nlohmann::json mismatches = nlohmann::json::array();
  for (const auto& d : diagrams::connected_corpus(5)) {
    auto series = growth_series(d, MultiParameter::uniform(d.rank(), rat(1)), 12);
    auto counts = sphere_counts(d, 12);
    for (int l = 0; l <= 12; ++l)
      if (series[l] != Rational(Integer(std::to_string(counts[l])))) {
        all = false;
        mismatches.push_back({{"diagram", d.to_json()}, {"l", l}});
      }
    ++diagrams_checked;
  }
  c.details["diagrams"] = diagrams_checked;
  c.details["mismatches"] = mismatches;
  c.check("corpus has 31 connected diagrams of rank <= 5", diagrams_checked == 31);
  c.check("series equals sphere counts for l <= 12 on every corpus diagram", all);
  auto a = diagrams::diagram_a();
  auto s = growth_series(a, MultiParameter::uniform(3, rat(1)), 3);
  c.check("diagram A counts 1,3,5,8", s == std::vector<Rational>{1, 3, 5, 8});
  return c;
}

inline Criterion hecke_identities(std::uint64_t seed) {
  Criterion c{3, "Hecke algebra identities"};
  bool quad = true;
  for (const auto& d : {diagrams::diagram_a(), diagrams::pentagon()})
    for (const char* q : {"1/4", "1/9", "1", "4", "9/4"}) {
      auto alg = HeckeAlgebra<Rational>::make(d, MultiParameter::uniform(d.rank(), parse_rational(q)));
      for (Gen s = 0; s < d.rank(); ++s) {
        H t = H::basis(alg, generator(d, s));
        quad = quad && mul(t, t) == H::one(alg) + alg->p(s) * t;
      }
    }
  c.check("quadratic relations", quad);

  auto a = diagrams::diagram_a();
  auto alg = exact_algebra(a, {rat(1, 4), rat(9, 4), rat(1, 9)});
  Ball ball5(a, 5);
  std::mt19937_64 rng(seed + 3);
  int assoc_fail = 0, trace_fail = 0;
  for (int i = 0; i < 200; ++i) {
    H x = random_element(alg, ball5, rng, 3), y = random_element(alg, ball5, rng, 3), z = random_element(alg, ball5, rng, 3);
    if (!(mul(mul(x, y), z) == mul(x, mul(y, z)))) ++assoc_fail;
  }
  for (int i = 0; i < 200; ++i) {
    H x = random_element(alg, ball5, rng, 4), y = random_element(alg, ball5, rng, 4);
    if (trace(mul(x, y)) != trace(mul(y, x))) ++trace_fail;
  }
  c.details["associativity_failures"] = assoc_fail;
  c.details["trace_failures"] = trace_fail;
  c.check("associativity on 200 seeded samples (radius 5)", assoc_fail == 0);
  c.check("trace property on 200 seeded samples", trace_fail == 0);

  bool group = true;
  for (const auto& d : {diagrams::diagram_a(), diagrams::pentagon()}) {
    auto one = HeckeAlgebra<Rational>::make(d, MultiParameter::uniform(d.rank(), rat(1)));
    Ball ball(d, 4);
    for (const auto& v : ball.elems())
      for (const auto& w : ball.elems()) group = group && mul(H::basis(one, v), H::basis(one, w)) == H::basis(one, multiply(d, v, w));
  }
  c.check("q = 1 reproduces the group algebra on radius-4 balls", group);
  return c;
}

inline Criterion operator_identities() {
  Criterion c{4, "Operator identity suite"};
  for (const auto& d : {diagrams::diagram_a(), diagrams::pentagon()}) {
    const std::string name = d.rank() == 3 ? "diagram A" : "pentagon";
    auto ball = make_ball(d, 8);
    auto act = action_suite(ball, 5);
    c.details["action_" + name] = act.to_json();
    c.check("action formula, |w| <= 5, " + name, act.pass);
    auto alg = HeckeAlgebra<Rational>::make(d, MultiParameter::uniform(d.rank(), rat(1, 4)));
    auto rem = projection_suite(ball, alg, 5);
    c.details["projection_" + name] = rem.to_json();
    c.check("projection identities under T_s, " + name, rem.pass);
  }

  auto a = diagrams::diagram_a();
  auto alg = exact_algebra(a, {rat(1, 4), rat(9, 4), rat(1, 9)});
  auto ball = make_ball(a, 8);
  int cliq_cases = 0;
  double cliq_worst = 0;
  for (const Elem& w : elements_up_to(*ball, 6)) {
    cliq_worst = std::max(cliq_worst, verify_cliq_identity(ball, alg, w));
    ++cliq_cases;
  }
  c.details["cliq_cases"] = cliq_cases;
  c.details["cliq_max_residual"] = cliq_worst;
  c.check("Cliq decomposition for all |w| <= 6 on diagram A", cliq_worst == 0);

  auto alg4 = HeckeAlgebra<Rational>::make(a, MultiParameter::uniform(3, rat(1, 4)));
  auto big = make_ball(a, 10);
  Elem g = parse_elem(a, "acbc");
  for (int l : {1, 2}) {
    auto r = verify_corollary_split(big, alg4, g, l);
    c.details["corollary_l" + std::to_string(l)] = {
        {"residual", r.residual}, {"x_terms", r.x_terms}, {"exactness_radius", r.exactness_radius}};
    c.check("T_{g^l} split through P_{s1} for g = acbc, l = " + std::to_string(l), r.residual == 0 && r.exactness_radius >= 0);
  }

  for (const auto& d : {diagrams::diagram_a(), diagrams::pentagon()}) {
    const std::string name = d.rank() == 3 ? "diagram A" : "pentagon";
    auto jr = join_suite(make_ball(d, 5), 5);
    c.details["join_" + name] = {{"cases", jr.cases}, {"failures", jr.failures}};
    c.check("P_v P_w = P_{join} on the radius-5 ball, " + name, jr.pass);
  }
  return c;
}

inline Criterion positivity_windows(std::uint64_t seed) {
  Criterion c{5, "Positivity windows"};
  const double tol = 1e-9;
  auto a = diagrams::diagram_a();
  const Rational choices[] = {rat(1, 4), rat(1, 9), rat(1)};
  std::vector<BallPtr> balls(13);
  auto ball_for = [&](int n) {
    if (!balls[n]) balls[n] = make_ball(a, n);
    return balls[n];
  };
  std::mt19937_64 rng(seed + 5);
  int float_fail = 0, exact_fail = 0, endpoint_fail = 0, unit_samples = 0;
  nlohmann::json samples = nlohmann::json::array();
  for (int i = 0; i < 50; ++i) {
    int len = 1 + static_cast<int>(rng() % 4);
    auto ball = ball_for(2 * len + 4);
    std::size_t idx = ball->sphere_begin(len) + rng() % (ball->sphere_end(len) - ball->sphere_begin(len));
    Elem w = ball->elem(idx);
    std::vector<Rational> q;
    for (int s = 0; s < 3; ++s) q.push_back(choices[rng() % 3]);
    auto alg = exact_algebra(a, q);
    auto win = positivity_window(ball, alg, w, tol);
    if (!win.within) ++float_fail;
    if (!*win.exact_within) ++exact_fail;
    if (len == 1) {
      ++unit_samples;
      if (std::abs(win.lo - win.bound_lo.get_d()) > tol || std::abs(win.hi - win.bound_hi.get_d()) > tol) ++endpoint_fail;
    }
    samples.push_back({{"w", format_elem(a, w)}, {"q", MultiParameter(q).to_json(a)}, {"lo", win.lo}, {"hi", win.hi},
                       {"bound", {to_string(win.bound_lo), to_string(win.bound_hi)}}});
  }
  // Endpoints for every generator and every parameter choice.
  for (Gen s = 0; s < 3; ++s)
    for (const auto& qv : choices) {
      auto alg = HeckeAlgebra<Rational>::make(a, MultiParameter::uniform(3, qv));
      auto win = positivity_window(ball_for(6), alg, generator(a, s), tol);
      if (std::abs(win.lo - win.bound_lo.get_d()) > tol || std::abs(win.hi - win.bound_hi.get_d()) > tol) ++endpoint_fail;
    }
  c.details["samples"] = samples;
  c.details["samples_with_length_one"] = unit_samples;
  c.check("float spectra within [prod min, prod max] +- 1e-9 (50 samples)", float_fail == 0);
  c.check("exact semidefinite containment (50 samples)", exact_fail == 0);
  c.check("endpoints attained for |w| = 1 within 1e-9", endpoint_fail == 0);
  return c;
}

inline Criterion central_projections() {
  Criterion c{6, "Central projections"};
  auto d = diagrams::free_product(3);
  const Rational q = rat(1, 4);
  auto alg = HeckeAlgebra<Rational>::make(d, MultiParameter::uniform(3, q));
  auto plus = SignPattern::all_plus(3);
  const Rational inv_w = growth_reciprocal(d, alg->param().flipped(plus));
  c.check("1/W(1/4) = 2/5", inv_w == rat(2, 5));

  // Radial form: E^(i) = (2/5) sum_{l <= i} (1/2)^l S_l.
  FreeProductRadial rad(3, alg->p(0));
  const Rational r = alg->r(0);
  const int imax = 60;
  std::vector<double> idem, eigen;
  bool trace_ok = true, radial_ok = true;
  FreeProductRadial::Vec e;
  Rational coef = inv_w;
  for (int i = 0; i <= imax; ++i) {
    e.push_back(coef);
    coef *= r;
    trace_ok = trace_ok && e[0] == rat(2, 5);
    auto sq = rad.mul(e, e);
    FreeProductRadial::Vec diff = sq;
    FreeProductRadial::add_scaled(diff, e, Rational(-1));
    idem.push_back(std::sqrt(rad.norm_sq(diff).get_d()));
    auto split = rad.split(e);
    auto half = rad.split(e);
    for (auto& x : half.a) x *= r;
    for (auto& x : half.b) x *= r;
    eigen.push_back(std::sqrt(rad.norm_sq(rad.sub(rad.mul_ta(split), half)).get_d()));
    if (i <= 6) {
      H explicit_e = central_projection_partial(alg, plus, i);
      H ta = H::basis(alg, generator(d, 0));
      trace_ok = trace_ok && trace(explicit_e) == rat(2, 5);
      Rational idem_exact = l2_norm_sq(mul(explicit_e, explicit_e) - explicit_e);
      Rational eigen_exact = l2_norm_sq(mul(ta, explicit_e) - r * explicit_e);
      radial_ok = radial_ok && idem_exact == rad.norm_sq(diff) &&
                  eigen_exact == rad.norm_sq(rad.sub(rad.mul_ta(split), half));
    }
  }
  auto strictly_decreasing_from = [](const std::vector<double>& v, int start) {
    for (std::size_t i = static_cast<std::size_t>(start) + 1; i < v.size(); ++i)
      if (!(v[i] < v[i - 1])) return false;
    return true;
  };
  auto first_below = [](const std::vector<double>& v, double t) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] < t) return static_cast<int>(i);
    return -1;
  };
  c.details["idempotent_residuals"] = idem;
  c.details["eigen_residuals"] = eigen;
  c.details["idempotent_below_1e-6_at"] = first_below(idem, 1e-6);
  c.details["eigen_below_1e-6_at"] = first_below(eigen, 1e-6);
  c.check("trace(E^(i)) = 2/5 exactly for i <= 60", trace_ok);
  c.check("radial evaluation agrees with explicit elements for i <= 6", radial_ok);
  c.check("||E^2 - E||_2 strictly decreasing for i >= 3", strictly_decreasing_from(idem, 3));
  c.check("||T_a E - E/2||_2 strictly decreasing for i >= 3", strictly_decreasing_from(eigen, 3));
  c.check("||E^2 - E||_2 < 1e-6 for some i <= 60", first_below(idem, 1e-6) >= 0);
  c.check("||T_a E - E/2||_2 < 1e-6 for some i <= 60", first_below(eigen, 1e-6) >= 0);

  // The (-,-,-) projection needs rho(|q_eps|) < 1 with |q_eps| = 4.
  auto minus = SignPattern::all_minus(3);
  auto pm = pole_and_rho(d, alg->param().flipped(minus));
  c.details["minus_pattern_rho_interval"] = interval_json(pm.rho);
  c.details["minus_pattern_region"] = region_name(region_membership(d, alg->param().flipped(minus)));
  bool inner_ok = false;
  try {
    H em = central_projection_partial(alg, minus, 6);
    H ep = central_projection_partial(alg, plus, 6);
    inner_ok = std::abs(l2_inner(ep, em).get_d()) < 1e-4;
  } catch (const ValidationError& err) {
    c.details["minus_pattern_refusal"] = err.what();
  }
  // Without the normalization the pairing is sum_l (-1)^l |S_l|, which
  // diverges; recorded to document why no normalization can rescue it.
  Integer pairing = 0;
  for (int l = 0; l <= imax; ++l) pairing += (l % 2 ? -1 : 1) * rad.sphere_size(l);
  c.details["unnormalized_pairing_at_60"] = pairing.get_str();
  c.check("<E_(+++), E_(---)>_2 below 1e-4 by i = 60", inner_ok);
  return c;
}

inline Criterion character_dichotomy(std::uint64_t seed) {
  Criterion c{7, "Character dichotomy"};
  auto a = diagrams::diagram_a();
  auto alg = exact_algebra(a, {rat(1, 4), rat(9, 4), rat(1, 9)});
  Ball ball(a, 4);
  std::mt19937_64 rng(seed + 7);
  int failures = 0;
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    auto eps = SignPattern::from_mask(3, mask);
    for (int i = 0; i < 200; ++i) {
      H x = random_element(alg, ball, rng, 3), y = random_element(alg, ball, rng, 3);
      if (char_value(eps, mul(x, y)) != char_value(eps, x) * char_value(eps, y)) ++failures;
    }
  }
  c.details["multiplicativity_failures"] = failures;
  c.check("chi multiplicative on 200 samples for each of the 8 patterns", failures == 0);

  auto f3 = diagrams::free_product(3);
  auto one = HeckeAlgebra<Rational>::make(f3, MultiParameter::uniform(3, rat(1)));
  auto plus = SignPattern::all_plus(3);
  std::vector<Rational> ratio_sq;
  nlohmann::json ratios = nlohmann::json::array();
  bool formula = true;
  for (int l = 1; l <= 8; ++l) {
    H h(one);
    for_each_normal_form(f3, l, [&](const std::string& raw) {
      if (static_cast<int>(raw.size()) != l) return;
      Elem w = Elem::from_canonical(raw);
      h.add_term(w, one->param().sqrt_q_w_eps(w, plus));
    });
    Rational chi = char_value(plus, h);
    Rational rsq = chi * chi / (Rational(l * l) * l2_norm_sq(h));
    ratio_sq.push_back(rsq);
    ratios.push_back(std::sqrt(rsq.get_d()));
    formula = formula && rsq == Rational(3 * (1L << (l - 1))) / Rational(l * l);
  }
  c.details["ratios_l1_to_l8"] = ratios;
  c.check("ratio equals sqrt(3 * 2^(l-1)) / l exactly", formula);
  bool monotone = true, monotone_from3 = true;
  for (int l = 3; l <= 8; ++l) {
    if (!(ratio_sq[l - 1] > ratio_sq[l - 2])) monotone = false;
    if (l >= 4 && !(ratio_sq[l - 1] > ratio_sq[l - 2])) monotone_from3 = false;
  }
  c.details["increasing_for_l_3_to_8"] = monotone_from3;
  c.check("ratio strictly increasing for l = 2..8", monotone);
  return c;
}

inline Criterion haagerup_suite(std::uint64_t seed) {
  Criterion c{8, "Haagerup suite"};
  c.details["sampling"] = "nonnegative coefficients in [0, 1)";
  auto d = diagrams::pentagon();
  auto alg = HeckeAlgebra<double>::make(d, MultiParameter::uniform(5, parse_rational("0.7")));
  std::vector<double> fitted;
  for (int n : {10, 11}) {
    auto ball = make_ball(d, n);
    std::vector<double> per_l;
    nlohmann::json rows = nlohmann::json::array();
    for (int l = 1; l <= 6; ++l) {
      auto r = haagerup_ratio(ball, alg, l, 50, seed, Sampling::Nonnegative);
      per_l.push_back(r.max_ratio);
      rows.push_back({{"l", l}, {"max_ratio", r.max_ratio}, {"norm_ratio_times_l", r.max_ratio * l}});
    }
    double hi = *std::max_element(per_l.begin(), per_l.end());
    double lo = *std::min_element(per_l.begin(), per_l.end());
    c.details["n" + std::to_string(n)] = {{"per_l", rows}, {"fitted_C", hi}, {"spread", hi / lo}};
    c.check("max ratio varies by less than a factor 3 across l, n = " + std::to_string(n), hi < 3 * lo);
    fitted.push_back(hi);
  }
  c.details["fitted_C"] = fitted[0];
  c.details["fitted_C_change"] = fitted[1] / fitted[0] - 1;
  c.check("fitted C stable within 10% under n -> n+1", std::abs(fitted[1] / fitted[0] - 1) <= 0.10);
  return c;
}

inline Criterion kappa_and_q_operator() {
  Criterion c{9, "kappa and Q-operator"};
  auto a = diagrams::diagram_a();
  auto ball = make_ball(a, 10);
  double fitted = fit_kappa_constant(*ball);
  double fitted7 = fit_kappa_constant(Ball(a, 7));
  c.details["kappa_C_radius_10"] = fitted;
  c.details["kappa_C_radius_7"] = fitted7;
  c.check("C fitted on radius 7 bounds kappa_w(l) / l on radius 10", fitted <= fitted7 + 1e-12);

  for (const char* u : {"e", "acbc"}) {
    Elem ue = parse_elem(a, u);
    std::vector<QOperator> sums;
    for (int cut = 4; cut <= 10; ++cut) sums.push_back(q_operator(ball, ue, rat(1, 2), cut, fitted));
    bool cauchy = true, monotone = true, geometric = true;
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < sums.size(); ++i) {
      if (i > 0) geometric = geometric && sums[i].tail_bound < sums[i - 1].tail_bound;
      for (std::size_t j = i + 1; j < sums.size(); ++j) {
        auto diff = sums[j].op - sums[i].op;
        double worst = 0;
        for (std::size_t col = 0; col < ball->size(); ++col)
          for (const auto& [row, x] : diff.column(col)) {
            if (x < 0) monotone = false;
            worst = std::max(worst, std::abs(x.get_d()));
          }
        // Diagonal operator: the norm is the largest entry.
        if (worst > sums[i].tail_bound) cauchy = false;
      }
      rows.push_back({{"cutoff", 4 + static_cast<int>(i)}, {"tail_bound", sums[i].tail_bound}});
    }
    c.details[std::string("q_operator_u_") + u] = rows;
    c.check(std::string("partial sums nondecreasing, u = ") + u, monotone);
    c.check(std::string("partial sums Cauchy within the tail bound, u = ") + u, cauchy);
    c.check(std::string("tail bound decreasing in the cutoff, u = ") + u, geometric);
  }
  return c;
}

}  // namespace acceptance

/// Runs every criterion in order; `on_done` sees each result as it finishes.
inline std::vector<Criterion> run_acceptance(std::uint64_t seed = 0,
                                             const std::function<void(const Criterion&)>& on_done = {}) {
  using namespace acceptance;
  std::vector<std::function<Criterion()>> suite = {
      [] { return classifier_exactness(); },
      [] { return growth_oracle(); },
      [&] { return hecke_identities(seed); },
      [] { return operator_identities(); },
      [&] { return positivity_windows(seed); },
      [] { return central_projections(); },
      [&] { return character_dichotomy(seed); },
      [&] { return haagerup_suite(seed); },
      [] { return kappa_and_q_operator(); },
  };
  std::vector<Criterion> out;
  for (auto& run : suite) {
    auto start = std::chrono::steady_clock::now();
    Criterion c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.id = static_cast<int>(out.size()) + 1;
      c.title = "criterion " + std::to_string(c.id);
      c.check("ran without exception", false);
      c.details["exception"] = e.what();
    }
    c.details["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (on_done) on_done(c);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace rahecke
