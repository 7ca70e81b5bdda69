#pragma once

// Growth series of a right-angled Coxeter group as a rational function and
// the simplicity classifier built on it.
//
// Spherical special subgroups of a right-angled system are exactly the
// cliques of the commuting graph, and W_Gamma(q) = prod_{s in Gamma} (1 + q_s),
// which gives
//
//   1 / W(q) = sum_{Gamma in Cliq} prod_{s in Gamma} (-q_s / (1 + q_s)).
//
// Along a ray t -> t q this is N(t) / L(t) with
//   L(t) = prod_v (1 + t v)^{m_v}
// over the distinct parameter values v, m_v being the largest number of
// generators with q_s = v inside one clique.  The positive roots of N are
// those of 1/W(tq), and rho(q) = 1 / (smallest positive root).

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rahecke/coxeter.hpp"
#include "rahecke/parameter.hpp"
#include "rahecke/polynomial.hpp"
#include "rahecke/rational.hpp"

namespace rahecke {

/// All cliques of the commuting graph, the empty clique first.
inline std::vector<GenMask> cliques(const CoxeterDiagram& d) {
  std::vector<GenMask> out;
  auto rec = [&](auto&& self, Gen next, GenMask current, GenMask allowed) -> void {
    out.push_back(current);
    for (Gen s = next; s < d.rank(); ++s)
      if ((allowed >> s) & 1U) self(self, s + 1, current | bit(s), allowed & d.commute_mask(s));
  };
  rec(rec, 0, 0, d.all_mask());
  return out;
}

/// D(q) = 1 / W(q) as a rational function evaluated at q.
inline Rational growth_reciprocal(const CoxeterDiagram& d, const MultiParameter& q) {
  if (q.rank() != d.rank()) throw ValidationError("parameter rank does not match diagram rank");
  Rational sum(0);
  for (GenMask c : cliques(d)) {
    Rational term(1);
    for (Gen s = 0; s < d.rank(); ++s)
      if ((c >> s) & 1U) term *= -q.q(s) / (1 + q.q(s));
    sum += term;
  }
  return sum;
}

/// L(t) from the header comment.
inline Polynomial growth_denominator(const CoxeterDiagram& d, const MultiParameter& q) {
  std::map<Rational, int> mult;
  for (GenMask c : cliques(d)) {
    std::map<Rational, int> here;
    for (Gen s = 0; s < d.rank(); ++s)
      if ((c >> s) & 1U) ++here[q.q(s)];
    for (const auto& [v, m] : here) mult[v] = std::max(mult[v], m);
  }
  Polynomial out = Polynomial::constant(1);
  for (const auto& [v, m] : mult) out = out * Polynomial::linear(1, v).pow(static_cast<unsigned>(m));
  return out;
}

/// N(t) = L(t) * D(t q), a polynomial with N(0) = 1.
inline Polynomial cleared_numerator(const CoxeterDiagram& d, const MultiParameter& q) {
  if (q.rank() != d.rank()) throw ValidationError("parameter rank does not match diagram rank");
  Polynomial den = growth_denominator(d, q);
  Polynomial sum;
  for (GenMask c : cliques(d)) {
    Polynomial num = Polynomial::constant(1);
    Polynomial rest = den;
    for (Gen s = 0; s < d.rank(); ++s) {
      if (!((c >> s) & 1U)) continue;
      num = num * Polynomial({Rational(0), -q.q(s)});
      auto [quot, rem] = rest.divmod(Polynomial::linear(1, q.q(s)));
      if (!rem.is_zero()) throw Error("growth denominator does not clear a clique term");
      rest = quot;
    }
    sum = sum + num * rest;
  }
  return sum;
}

/// Coefficients of W(t q) = L(t) / N(t) up to t^n; the coefficient of t^l
/// equals a_l(q).
inline std::vector<Rational> growth_series(const CoxeterDiagram& d, const MultiParameter& q, int n) {
  return growth_denominator(d, q).series_div(cleared_numerator(d, q), n + 1);
}

struct PoleAndRho {
  Polynomial numerator;
  /// nullopt means t0 = +infinity (W finite) and rho = 0.
  std::optional<Interval> t0;
  Interval rho;
};

inline PoleAndRho pole_and_rho(const CoxeterDiagram& d, const MultiParameter& q, long bits = 64) {
  PoleAndRho out;
  out.numerator = cleared_numerator(d, q);
  out.t0 = smallest_positive_root(out.numerator, bits);
  if (!out.t0) {
    out.rho = Interval{Rational(0), Rational(0)};
  } else {
    out.rho = Interval{dyadic_floor(Rational(1) / out.t0->hi, bits), dyadic_ceil(Rational(1) / out.t0->lo, bits)};
  }
  return out;
}

enum class Region { Interior, Boundary, Exterior };

inline std::string region_name(Region r) {
  switch (r) {
    case Region::Interior: return "Interior";
    case Region::Boundary: return "Boundary";
    case Region::Exterior: return "Exterior";
  }
  return "?";
}

/// Interior iff rho(q) < 1, Boundary iff rho(q) = 1, Exterior iff rho(q) > 1.
/// Decided by the exact sign of N(1) and a Sturm count on (0, 1].
inline Region region_membership(const CoxeterDiagram& d, const MultiParameter& q) {
  Polynomial n = square_free(cleared_numerator(d, q));
  if (n.degree() <= 0) return Region::Interior;
  SturmSequence sturm(n);
  int c = sturm.count(Rational(0), Rational(1));
  if (n(Rational(1)) == 0) return c - 1 > 0 ? Region::Exterior : Region::Boundary;
  return c > 0 ? Region::Exterior : Region::Interior;
}

struct FlipReport {
  SignPattern eps;
  MultiParameter flipped;
  Region region;
  PoleAndRho pole;
};

struct Verdict {
  enum class Status { Simple, NotSimple, NotApplicable };
  Status status = Status::NotApplicable;
  std::vector<SignPattern> witnesses;
  std::vector<SignPattern> boundary_flags;
  std::vector<FlipReport> per_flip;
  std::string reason;
};

inline std::string status_name(Verdict::Status s) {
  switch (s) {
    case Verdict::Status::Simple: return "Simple";
    case Verdict::Status::NotSimple: return "NotSimple";
    case Verdict::Status::NotApplicable: return "NotApplicable";
  }
  return "?";
}

/// Rank-infinite systems are simple for every q; not computed, reported as a
/// constant by the CLI.
inline constexpr const char* kInfiniteRankAnswer = "Simple";

/// NotSimple iff some flip (q_s^{eps_s}) has rho <= 1.  Every one of the
/// 2^rank sign patterns is checked, in mask order.
inline Verdict classify_simplicity(const CoxeterDiagram& d, const MultiParameter& q, long bits = 64) {
  Verdict v;
  if (!is_irreducible(d)) {
    v.reason = "diagram is reducible; the algebra splits as a tensor product over components";
    return v;
  }
  if (d.rank() > 24) throw ResourceError("sign-pattern sweep over 2^" + std::to_string(d.rank()) + " patterns refused");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d.rank()); ++mask) {
    SignPattern eps = SignPattern::from_mask(d.rank(), mask);
    MultiParameter f = q.flipped(eps);
    Region r = region_membership(d, f);
    v.per_flip.push_back(FlipReport{eps, f, r, pole_and_rho(d, f, bits)});
    if (r != Region::Exterior) v.witnesses.push_back(eps);
    if (r == Region::Boundary) v.boundary_flags.push_back(eps);
  }
  v.status = v.witnesses.empty() ? Verdict::Status::Simple : Verdict::Status::NotSimple;
  return v;
}

/// Sign patterns eps whose character chi_{q_eps} is bounded on the reduced
/// C*-algebra: exactly the witnesses of the classifier.
inline std::vector<SignPattern> character_list(const CoxeterDiagram& d, const MultiParameter& q) {
  Verdict v = classify_simplicity(d, q);
  if (v.status == Verdict::Status::NotApplicable) throw ValidationError(v.reason);
  return v.witnesses;
}

inline nlohmann::json interval_json(const Interval& i) { return {to_string(i.lo), to_string(i.hi)}; }

inline nlohmann::json polynomial_json(const Polynomial& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

inline nlohmann::json pole_json(const PoleAndRho& pr) {
  nlohmann::json j;
  j["t0_interval"] = pr.t0 ? interval_json(*pr.t0) : nlohmann::json("inf");
  j["rho_interval"] = interval_json(pr.rho);
  return j;
}

inline nlohmann::json verdict_json(const CoxeterDiagram& d, const Verdict& v) {
  nlohmann::json j;
  j["status"] = status_name(v.status);
  if (v.status == Verdict::Status::NotApplicable) {
    j["reason"] = v.reason;
    return j;
  }
  j["witnesses"] = nlohmann::json::array();
  for (const auto& e : v.witnesses) j["witnesses"].push_back(e.str());
  j["boundary_flags"] = nlohmann::json::array();
  for (const auto& e : v.boundary_flags) j["boundary_flags"].push_back(e.str());
  j["per_flip"] = nlohmann::json::object();
  for (const auto& f : v.per_flip) {
    nlohmann::json pf = pole_json(f.pole);
    pf["region"] = region_name(f.region);
    pf["q"] = f.flipped.to_json(d);
    j["per_flip"][f.eps.str()] = pf;
  }
  return j;
}

inline nlohmann::json growth_json(const CoxeterDiagram& d, const MultiParameter& q, long bits = 64) {
  PoleAndRho pr = pole_and_rho(d, q, bits);
  nlohmann::json j = pole_json(pr);
  j["q"] = q.to_json(d);
  j["reciprocal_value"] = to_string(growth_reciprocal(d, q));
  j["cleared_polynomial"] = polynomial_json(pr.numerator);
  j["denominator_polynomial"] = polynomial_json(growth_denominator(d, q));
  j["region"] = region_name(region_membership(d, q));
  return j;
}

}  // namespace rahecke
