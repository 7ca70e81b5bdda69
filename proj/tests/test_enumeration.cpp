#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "rahecke/ball.hpp"
#include "rahecke/corpus.hpp"
#include "rahecke/parameter.hpp"

using namespace rahecke;

namespace {

std::vector<Rational> ones(int n) { return std::vector<Rational>(n, Rational(1)); }

}  // namespace

TEST(Ball, Examples) {
  Ball dinf(diagrams::d_infinity(), 3);
  EXPECT_EQ(dinf.sphere_sizes(), (std::vector<std::size_t>{1, 2, 2, 2}));
  EXPECT_EQ(dinf.size(), 7u);

  auto d = diagrams::diagram_a();
  Ball a(d, 2);
  EXPECT_EQ(a.sphere_sizes(), (std::vector<std::size_t>{1, 3, 5}));
  std::set<std::string> len2;
  for (std::size_t i = a.sphere_begin(2); i < a.sphere_end(2); ++i) len2.insert(format_elem(d, a.elem(i)));
  EXPECT_EQ(len2, (std::set<std::string>{"ab", "ac", "ca", "bc", "cb"}));

  Ball zero(d, 0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero.elem(0).is_identity());
}

TEST(Ball, InvariantsAndOracle) {
  for (const auto& d : {diagrams::diagram_a(), diagrams::pentagon(), diagrams::free_product(4)}) {
    Ball ball(d, 6);
    auto oracle_words = oracle::shortlex_ball(d, 6);
    ASSERT_EQ(ball.size(), oracle_words.size());
    for (std::size_t i = 0; i < ball.size(); ++i) {
      EXPECT_EQ(ball.elem(i).raw(), oracle_words[i]);
      EXPECT_EQ(*ball.find(ball.elem(i)), i);
      if (i > 0) {
        EXPECT_LT(ball.elem(i - 1), ball.elem(i));
      }
    }
    EXPECT_TRUE(ball.elem(0).is_identity());
  }
}

TEST(Ball, ResourceCap) { EXPECT_THROW(Ball(diagrams::free_product(4), 10, 1000), ResourceError); }

TEST(Ball, MultiplicationTables) {
  auto d = diagrams::pentagon();
  Ball ball(d, 4);
  for (std::size_t i = 0; i < ball.size(); ++i)
    for (Gen s = 0; s < d.rank(); ++s) {
      Elem sw = multiply_left(d, s, ball.elem(i));
      auto j = ball.lmul(s, i);
      if (sw.length() <= 4) EXPECT_EQ(ball.elem(static_cast<std::size_t>(j)), sw);
      else EXPECT_EQ(j, Ball::kOutside);
    }
}

TEST(SphereCounts, AgreeWithBall) {
  for (const auto& d : diagrams::connected_corpus(4)) {
    Ball ball(d, 7);
    auto counts = sphere_counts(d, 7);
    auto sizes = ball.sphere_sizes();
    for (int l = 0; l <= 7; ++l) EXPECT_EQ(counts[l], sizes[l]);
  }
}

TEST(SphereWeight, Examples) {
  auto dinf = diagrams::d_infinity();
  auto w = sphere_weights(dinf, ones(2), 6);
  EXPECT_EQ(w[0], 1);
  for (int l = 1; l <= 6; ++l) EXPECT_EQ(w[l], 2);

  auto a = sphere_weights(diagrams::diagram_a(), ones(3), 3);
  EXPECT_EQ(a, (std::vector<Rational>{1, 3, 5, 8}));
}

TEST(SphereWeight, WeightedSumMatchesElementwiseSum) {
  auto d = diagrams::diagram_a();
  std::vector<Rational> q{make_rational(1, 4), make_rational(2, 3), make_rational(5, 7)};
  Ball ball(d, 6);
  auto w = sphere_weights(d, q, 6);
  for (int l = 0; l <= 6; ++l) {
    Rational sum(0);
    for (std::size_t i = ball.sphere_begin(l); i < ball.sphere_end(l); ++i) sum += word_weight(ball.elem(i), q);
    EXPECT_EQ(w[l], sum);
  }
}

TEST(SphereWeight, Submultiplicative) {
  for (const auto& d : {diagrams::diagram_a(), diagrams::pentagon()}) {
    std::vector<Rational> q(d.rank(), make_rational(3, 5));
    q[0] = make_rational(7, 4);
    auto a = sphere_weights(d, q, 10);
    for (int l = 0; l <= 10; ++l)
      for (int m = 0; l + m <= 10; ++m) EXPECT_LE(a[l + m], a[l] * a[m]);
  }
}

TEST(RestrictedSphereWeight, Examples) {
  auto d = diagrams::diagram_a();
  auto q = ones(3);
  Elem g = parse_elem(d, "acbc");
  auto r = restricted_sphere_weights(d, q, 8, g);
  for (int l = 0; l < 4; ++l) EXPECT_EQ(r[l], 0);
  EXPECT_EQ(r[4], 1);

  std::vector<Rational> qq{make_rational(1, 4), make_rational(1, 9), make_rational(2, 1)};
  EXPECT_EQ(restricted_sphere_weight(d, qq, 4, g), word_weight(g, qq));

  // Independent double loop: all (w, u) pairs with u <= w^-1.
  Ball ball(d, 6);
  Rational brute(0);
  for (std::size_t i = ball.sphere_begin(6); i < ball.sphere_end(6); ++i)
    if (starts_with(d, g, inverse(d, ball.elem(i)))) brute += word_weight(ball.elem(i), q);
  EXPECT_EQ(r[6], brute);
}

// The l-th roots of the restricted and full sphere sums approach each other.
TEST(RestrictedSphereWeight, RootRatioAtLengthTwenty) {
  auto d = diagrams::diagram_a();
  auto q = ones(3);
  Elem g = parse_elem(d, "acbc");
  auto full = sphere_weights(d, q, 20);
  auto restricted = restricted_sphere_weights(d, q, 20, g);
  double ratio = std::pow(restricted[20].get_d() / full[20].get_d(), 1.0 / 20);
  RecordProperty("root_ratio", std::to_string(ratio));
  EXPECT_LT(std::abs(ratio - 1), 0.05) << "ratio of 20th roots " << ratio;
}

// restricted / full tends to a positive constant c, so the ratio of l-th
// roots is c^{1/l} -> 1.
TEST(RestrictedSphereWeight, ProportionConverges) {
  auto d = diagrams::diagram_a();
  auto q = ones(3);
  Elem g = parse_elem(d, "acbc");
  auto full = sphere_weights(d, q, 24);
  auto restricted = restricted_sphere_weights(d, q, 24, g);
  std::vector<double> c;
  for (int l = 12; l <= 24; ++l) c.push_back(restricted[l].get_d() / full[l].get_d());
  for (std::size_t i = 1; i < c.size(); ++i) EXPECT_LT(std::abs(c[i] - c[i - 1]), 0.1 * c[i]);
  EXPECT_LT(std::abs(c.back() - c[c.size() - 2]), 1e-3 * c.back());
  double root_gap_24 = std::abs(std::pow(c.back(), 1.0 / 24) - 1);
  double root_gap_12 = std::abs(std::pow(c.front(), 1.0 / 12) - 1);
  EXPECT_LT(root_gap_24, root_gap_12);
}

TEST(Kappa, Examples) {
  auto d = diagrams::diagram_a();
  Ball ball(d, 6);
  for (const auto& w : ball.elems()) {
    EXPECT_EQ(kappa(d, w, 0), 1u);
    EXPECT_EQ(kappa(d, w, w.length()), 1u);
  }
  EXPECT_EQ(kappa(d, parse_elem(d, "ab"), 1), 2u);
}

TEST(Kappa, AgreesWithStartsWithScan) {
  auto d = diagrams::diagram_a();
  Ball ball(d, 7);
  for (std::size_t i = 0; i < ball.size(); i += 7) {
    const Elem& w = ball.elem(i);
    for (int l = 0; l <= w.length(); ++l) {
      std::uint64_t brute = 0;
      for (std::size_t j = ball.sphere_begin(l); j < ball.sphere_end(l); ++j)
        if (starts_with(d, ball.elem(j), w)) ++brute;
      EXPECT_EQ(kappa(d, w, l), brute);
    }
  }
}

// kappa_w(l) <= C l^{k-2} with a constant fitted on radius 7 that still
// bounds radius 10.
TEST(Kappa, PolynomialBound) {
  for (const auto& d : {diagrams::diagram_a(), diagrams::pentagon()}) {
    const int k = d.rank();
    auto fit = [&](int radius) {
      Ball ball(d, radius);
      double c = 0;
      for (std::size_t v = 1; v < ball.size(); ++v) {
        std::vector<double> counts(ball.length(v) + 1, 0);
        for (std::size_t u : ball.prefix_indices(v)) counts[ball.length(u)] += 1;
        for (std::size_t l = 1; l < counts.size(); ++l) c = std::max(c, counts[l] / std::pow(double(l), k - 2));
      }
      return c;
    };
    const int big = d.rank() == 3 ? 10 : 7;
    double c_small = fit(big - 3), c_big = fit(big);
    RecordProperty("C_" + std::to_string(k), std::to_string(c_big));
    EXPECT_LE(c_big, c_small + 1e-12);
  }
}

// For a reducible diagram the sphere counts are the convolution of the
// component counts.
TEST(SphereCounts, ProductRuleForComponents) {
  CoxeterDiagram d({"a", "b", "c", "d", "f"}, {{"a", "d"}, {"a", "f"}, {"b", "d"}, {"b", "f"}, {"c", "d"}, {"c", "f"}});
  auto comps = components(d);
  ASSERT_EQ(comps.size(), 2u);
  auto c0 = sphere_counts(comps[0], 9), c1 = sphere_counts(comps[1], 9), all = sphere_counts(d, 9);
  for (int l = 0; l <= 9; ++l) {
    std::uint64_t conv = 0;
    for (int i = 0; i <= l; ++i) conv += c0[i] * c1[l - i];
    EXPECT_EQ(all[l], conv);
  }
}
