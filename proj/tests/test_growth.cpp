#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "rahecke/ball.hpp"
#include "rahecke/corpus.hpp"
#include "rahecke/growth.hpp"

using namespace rahecke;

namespace {

Rational R(long a, long b = 1) { return make_rational(a, b); }

MultiParameter uniform(const CoxeterDiagram& d, const Rational& q) { return MultiParameter::uniform(d.rank(), q); }

Verdict::Status classify(const CoxeterDiagram& d, const Rational& q) {
  return classify_simplicity(d, uniform(d, q)).status;
}

// Exact test x in [lo, hi] for x = (a + b sqrt5) / c, c > 0.
bool surd_in(const Interval& i, long a, long b, long c) {
  auto le = [&](const Rational& r) {
    // r <= (a + b sqrt5)/c  <=>  r c - a <= b sqrt5
    Rational lhs = r * c - a;
    if (b >= 0 && lhs <= 0) return true;
    if (b >= 0) return lhs * lhs <= Rational(5 * b * b);
    if (lhs >= 0) return false;
    return lhs * lhs >= Rational(5 * b * b);
  };
  auto ge = [&](const Rational& r) {
    Rational lhs = r * c - a;
    if (b >= 0 && lhs < 0) return false;
    if (b >= 0) return lhs * lhs >= Rational(5 * b * b);
    if (lhs >= 0) return true;
    return lhs * lhs <= Rational(5 * b * b);
  };
  return le(i.lo) && ge(i.hi);
}

}  // namespace

TEST(Polynomial, ArithmeticAndSeries) {
  Polynomial p({R(1), R(-1), R(-1)});
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p(R(1)), -1);
  auto [q, r] = (p * Polynomial::linear(2, 3) + Polynomial::constant(5)).divmod(Polynomial::linear(2, 3));
  EXPECT_EQ(q, p);
  EXPECT_EQ(r, Polynomial::constant(5));
  // 1 / (1 - t - t^2) is the Fibonacci series.
  auto s = Polynomial::constant(1).series_div(p, 10);
  std::vector<Rational> fib{1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
  EXPECT_EQ(s, fib);
  EXPECT_EQ(square_free(Polynomial::linear(1, 1).pow(3) * Polynomial::linear(-1, 2)).degree(), 2);
}

TEST(Polynomial, SturmCountsMatchKnownRoots) {
  // (t - 1/3)(t - 1/2)(t - 2)(t + 1)
  Polynomial p = Polynomial::linear(R(-1, 3), 1) * Polynomial::linear(R(-1, 2), 1) * Polynomial::linear(-2, 1) *
                 Polynomial::linear(1, 1);
  SturmSequence s(p);
  EXPECT_EQ(s.count(R(0), R(1)), 2);
  EXPECT_EQ(s.count(R(0), R(10)), 3);
  EXPECT_EQ(s.count(R(-5), R(10)), 4);
  EXPECT_EQ(s.count(R(1, 2), R(1)), 0);
  auto root = smallest_positive_root(p);
  ASSERT_TRUE(root);
  EXPECT_TRUE(root->contains(R(1, 3)));
  EXPECT_LE(root->width(), pow2(-64));
  EXPECT_FALSE(smallest_positive_root(Polynomial::linear(1, 1)));
}

TEST(Cliques, PentagonHasVerticesAndEdges) {
  auto c = cliques(diagrams::pentagon());
  EXPECT_EQ(c.size(), 11u);
  EXPECT_EQ(c.front(), 0u);
}

TEST(GrowthReciprocal, Examples) {
  EXPECT_EQ(growth_reciprocal(diagrams::d_infinity(), uniform(diagrams::d_infinity(), 1)), 0);
  auto f3 = diagrams::free_product(3);
  EXPECT_EQ(growth_reciprocal(f3, uniform(f3, 1)), R(-1, 2));
  // Finite group (Z/2)^2: 1 / (1+q)^2.
  CoxeterDiagram k2({"a", "b"}, {{"a", "b"}});
  EXPECT_EQ(growth_reciprocal(k2, uniform(k2, R(1, 3))), R(9, 16));
}

TEST(PoleAndRho, Examples) {
  auto f3 = diagrams::free_product(3);
  auto pf = pole_and_rho(f3, uniform(f3, 1));
  EXPECT_EQ(pf.numerator, Polynomial({R(1), R(-2)}));
  EXPECT_TRUE(pf.t0->contains(R(1, 2)));
  EXPECT_TRUE(pf.rho.contains(R(2)));

  auto a = diagrams::diagram_a();
  auto pa = pole_and_rho(a, uniform(a, 1));
  EXPECT_EQ(pa.numerator, Polynomial({R(1), R(-1), R(-1)}));
  EXPECT_TRUE(surd_in(*pa.t0, -1, 1, 2));
  EXPECT_TRUE(surd_in(pa.rho, 1, 1, 2));
  EXPECT_LE(pa.t0->width(), pow2(-64));

  auto c5 = diagrams::pentagon();
  auto pc = pole_and_rho(c5, uniform(c5, 1));
  EXPECT_EQ(pc.numerator, Polynomial({R(1), R(-3), R(1)}));
  EXPECT_TRUE(surd_in(*pc.t0, 3, -1, 2));
  EXPECT_TRUE(surd_in(pc.rho, 3, 1, 2));

  CoxeterDiagram k3({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}});
  auto pk = pole_and_rho(k3, uniform(k3, 1));
  EXPECT_FALSE(pk.t0);
  EXPECT_EQ(pk.rho.hi, 0);
}

// The power series of L/N equals the weighted sphere sums, for every corpus
// diagram and a generic rational multi-parameter.
TEST(GrowthSeries, MatchesEnumerationOnCorpus) {
  std::mt19937_64 rng(3);
  for (const auto& d : diagrams::connected_corpus(5)) {
    std::vector<Rational> q;
    for (int s = 0; s < d.rank(); ++s) q.push_back(R(static_cast<long>(1 + rng() % 7), static_cast<long>(1 + rng() % 5)));
    const int n = d.rank() <= 4 ? 9 : 7;
    auto series = growth_series(d, MultiParameter(q), n);
    auto sums = sphere_weights(d, q, n);
    for (int l = 0; l <= n; ++l) ASSERT_EQ(series[l], sums[l]) << "rank " << d.rank() << " l " << l;
  }
}

TEST(GrowthSeries, DiagramACounts) {
  auto s = growth_series(diagrams::diagram_a(), uniform(diagrams::diagram_a(), 1), 3);
  EXPECT_EQ(s, (std::vector<Rational>{1, 3, 5, 8}));
}

TEST(PoleAndRho, RayHomogeneity) {
  for (const auto& d : {diagrams::diagram_a(), diagrams::pentagon(), diagrams::free_product(3)}) {
    std::vector<Rational> qv;
    for (int s = 0; s < d.rank(); ++s) qv.push_back(R(s + 2, 3));
    MultiParameter q(qv);
    auto base = pole_and_rho(d, q);
    for (Rational t : {R(1, 3), R(5, 2), R(7)}) {
      auto scaled = pole_and_rho(d, q.scaled(t));
      EXPECT_TRUE(scaled.rho.intersects(Interval{base.rho.lo * t, base.rho.hi * t}));
      EXPECT_TRUE(scaled.t0->intersects(Interval{base.t0->lo / t, base.t0->hi / t}));
    }
  }
}

// a_l^{1/l} >= rho for every l, decreasing towards rho.
TEST(PoleAndRho, FeketeSandwich) {
  auto d = diagrams::diagram_a();
  auto pr = pole_and_rho(d, uniform(d, 1));
  auto a = sphere_weights(d, std::vector<Rational>(3, Rational(1)), 20);
  double rho = pr.rho.hi.get_d();
  for (int l = 1; l <= 20; ++l) {
    EXPECT_GE(Rational(a[l]), rational_pow(pr.rho.lo, l));
  }
  double root20 = std::pow(a[20].get_d(), 1.0 / 20);
  EXPECT_LT((root20 - rho) / rho, 0.05);
  EXPECT_LT(std::pow(a[20].get_d(), 1.0 / 20), std::pow(a[10].get_d(), 1.0 / 10));
}

TEST(Region, Examples) {
  auto f3 = diagrams::free_product(3);
  EXPECT_EQ(region_membership(f3, uniform(f3, R(1, 4))), Region::Interior);
  EXPECT_EQ(region_membership(f3, uniform(f3, R(1, 2))), Region::Boundary);
  auto dinf = diagrams::d_infinity();
  EXPECT_EQ(region_membership(dinf, uniform(dinf, 1)), Region::Boundary);
  auto a = diagrams::diagram_a();
  EXPECT_EQ(region_membership(a, uniform(a, 1)), Region::Exterior);
}

// Region agrees with the certified rho interval.
TEST(Region, ConsistentWithRhoInterval) {
  std::mt19937_64 rng(5);
  for (const auto& d : diagrams::connected_corpus(4)) {
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<Rational> q;
      for (int s = 0; s < d.rank(); ++s) q.push_back(R(static_cast<long>(1 + rng() % 9), static_cast<long>(1 + rng() % 9)));
      MultiParameter mp(q);
      auto pr = pole_and_rho(d, mp);
      Region r = region_membership(d, mp);
      if (pr.rho.hi < 1) {
        EXPECT_EQ(r, Region::Interior);
      }
      if (pr.rho.lo > 1) {
        EXPECT_EQ(r, Region::Exterior);
      }
      if (r == Region::Boundary) {
        EXPECT_TRUE(pr.rho.contains(Rational(1)));
      }
      // Openness: an Interior point with certified margin stays Interior
      // after scaling by 1 + 10^-3.
      if (r == Region::Interior && pr.rho.hi * R(1001, 1000) < 1) {
        EXPECT_EQ(region_membership(d, mp.scaled(R(1001, 1000))), Region::Interior);
      }
    }
  }
}

TEST(Classify, DInfinity) {
  auto d = diagrams::d_infinity();
  for (Rational q : {R(1, 4), R(1), R(4)}) EXPECT_EQ(classify(d, q), Verdict::Status::NotSimple);
  auto v = classify_simplicity(d, uniform(d, 1));
  EXPECT_EQ(v.witnesses.size(), 4u);
  EXPECT_EQ(v.boundary_flags.size(), 4u);
  // Unflipped pattern is boundary only at q = 1; mixed flips (q, 1/q) always
  // have q_a q_b = 1.
  for (Rational q : {R(1, 4), R(4)}) {
    auto flags = classify_simplicity(d, uniform(d, q)).boundary_flags;
    EXPECT_EQ(flags.size(), 2u);
    for (const auto& e : flags) EXPECT_FALSE(e.all_positive());
  }
}

TEST(Classify, FreeProductOfThree) {
  auto d = diagrams::free_product(3);
  for (Rational q : {R(1), R(3, 5), R(19, 10)}) EXPECT_EQ(classify(d, q), Verdict::Status::Simple) << q;
  for (Rational q : {R(2, 5), R(1, 2), R(2), R(3)}) EXPECT_EQ(classify(d, q), Verdict::Status::NotSimple) << q;
  auto half = classify_simplicity(d, uniform(d, R(1, 2)));
  ASSERT_EQ(half.boundary_flags.size(), 1u);
  EXPECT_TRUE(half.boundary_flags[0].all_positive());
  auto quarter = character_list(d, uniform(d, R(1, 4)));
  ASSERT_EQ(quarter.size(), 1u);
  EXPECT_TRUE(quarter[0].all_positive());
}

TEST(Classify, PentagonAndReducible) {
  EXPECT_EQ(classify(diagrams::pentagon(), 1), Verdict::Status::Simple);
  CoxeterDiagram split({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
  auto v = classify_simplicity(split, uniform(split, 1));
  EXPECT_EQ(v.status, Verdict::Status::NotApplicable);
  EXPECT_FALSE(v.reason.empty());
}

// A witness exists iff some flip has rho <= 1, judged from the rho interval.
TEST(Classify, WitnessesAgreeWithRhoIntervals) {
  std::mt19937_64 rng(9);
  for (const auto& d : diagrams::connected_corpus(4)) {
    if (d.rank() < 2) continue;
    std::vector<Rational> q;
    for (int s = 0; s < d.rank(); ++s) q.push_back(R(static_cast<long>(1 + rng() % 6), static_cast<long>(1 + rng() % 6)));
    auto v = classify_simplicity(d, MultiParameter(q));
    for (const auto& f : v.per_flip) {
      bool witness = std::find(v.witnesses.begin(), v.witnesses.end(), f.eps) != v.witnesses.end();
      if (f.pole.rho.hi < 1) {
        EXPECT_TRUE(witness);
      }
      if (f.pole.rho.lo > 1) {
        EXPECT_FALSE(witness);
      }
    }
  }
}

TEST(ProductRule, ReciprocalFactorsOverComponents) {
  CoxeterDiagram d({"a", "b", "c", "d", "f"}, {{"a", "d"}, {"a", "f"}, {"b", "d"}, {"b", "f"}, {"c", "d"}, {"c", "f"}});
  std::vector<Rational> q{R(1, 2), R(2, 3), R(5), R(3, 7), R(9, 4)};
  auto comps = components(d);
  ASSERT_EQ(comps.size(), 2u);
  Rational prod(1);
  for (const auto& c : comps) {
    std::vector<Rational> qc;
    for (const auto& name : c.names()) qc.push_back(q[d.gen(name)]);
    prod *= growth_reciprocal(c, MultiParameter(qc));
  }
  EXPECT_EQ(growth_reciprocal(d, MultiParameter(q)), prod);
}

TEST(GrowthJson, Fields) {
  auto d = diagrams::free_product(3);
  auto j = growth_json(d, uniform(d, 1));
  EXPECT_EQ(j["reciprocal_value"], "-1/2");
  EXPECT_EQ(j["region"], "Exterior");
  EXPECT_EQ(j["cleared_polynomial"], (nlohmann::json{"1/1", "-2/1"}));
  auto v = verdict_json(d, classify_simplicity(d, uniform(d, R(1, 2))));
  EXPECT_EQ(v["status"], "NotSimple");
  EXPECT_TRUE(v["per_flip"].contains("+++"));
}
