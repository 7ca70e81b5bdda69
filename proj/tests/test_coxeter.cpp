#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "rahecke/ball.hpp"
#include "rahecke/corpus.hpp"
#include "rahecke/coxeter.hpp"

using namespace rahecke;

namespace {

CoxeterDiagram A() { return diagrams::diagram_a(); }

Elem E(const CoxeterDiagram& d, const char* w) { return parse_elem(d, w); }

std::string S(const CoxeterDiagram& d, const Elem& w) { return format_elem(d, w); }

}  // namespace

TEST(ParseDiagram, Examples) {
  auto dinf = parse_diagram(R"({"generators":["a","b"],"commuting":[]})");
  EXPECT_EQ(dinf.rank(), 2);
  EXPECT_FALSE(dinf.commute(0, 1));

  auto a = parse_diagram(R"({"generators":["a","b","c"],"commuting":[["a","b"]]})");
  EXPECT_TRUE(a.commute(0, 1));
  EXPECT_TRUE(a.commute(1, 0));
  EXPECT_FALSE(a.commute(0, 2));
  EXPECT_EQ(a, A());
}

TEST(ParseDiagram, Errors) {
  EXPECT_THROW(parse_diagram(R"({"generators":["a","a"]})"), ValidationError);
  EXPECT_THROW(parse_diagram(R"({"generators":["a","b"],"commuting":[["a","a"]]})"), ValidationError);
  EXPECT_THROW(parse_diagram(R"({"generators":["a","b"],"commuting":[["a","z"]]})"), ValidationError);
  EXPECT_THROW(parse_diagram(R"({"generators":[]})"), ValidationError);
  EXPECT_THROW(parse_diagram("{not json"), ValidationError);
}

TEST(Irreducible, Examples) {
  EXPECT_TRUE(is_irreducible(A()));
  CoxeterDiagram k4({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}});
  EXPECT_FALSE(is_irreducible(k4));
  EXPECT_EQ(components(k4).size(), 4u);
  EXPECT_TRUE(is_irreducible(CoxeterDiagram({"a"}, {})));
}

TEST(Components, Examples) {
  auto c = components(A());
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0], A());
  auto split = components(CoxeterDiagram({"a", "b"}, {{"a", "b"}}));
  ASSERT_EQ(split.size(), 2u);
  EXPECT_EQ(split[0].names(), std::vector<std::string>{"a"});
  EXPECT_EQ(split[1].names(), std::vector<std::string>{"b"});
}

// Union-find over all 64 labelled 4-vertex diagrams.
TEST(Components, BruteForceFourVertices) {
  for (std::uint32_t edges = 0; edges < 64; ++edges) {
    auto d = diagrams::from_infinity_edges(4, edges);
    std::vector<int> parent{0, 1, 2, 3};
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (!d.commute(i, j)) parent[find(i)] = find(j);
    std::set<int> roots;
    for (int i = 0; i < 4; ++i) roots.insert(find(i));
    auto comps = components(d);
    ASSERT_EQ(comps.size(), roots.size()) << edges;
    std::size_t total = 0;
    for (const auto& c : comps) {
      total += c.rank();
      EXPECT_TRUE(is_irreducible(c));
    }
    EXPECT_EQ(total, 4u);
  }
}

TEST(NormalForm, Examples) {
  auto d = A();
  EXPECT_TRUE(E(d, "aa").is_identity());
  EXPECT_EQ(S(d, E(d, "ba")), "ab");
  EXPECT_EQ(S(d, E(d, "bacb")), "abcb");
}

TEST(NormalForm, MatchesCayleyGraphOracle) {
  for (const auto& d : {A(), diagrams::pentagon(), diagrams::free_product(3),
                        CoxeterDiagram({"a", "b", "c", "d"}, {{"a", "c"}, {"b", "d"}, {"a", "d"}})}) {
    oracle::Tits tits(d);
    auto words = oracle::shortlex_ball(d, 6);
    std::map<oracle::Tits::Mat, std::string> canon;
    for (const auto& w : words) canon.emplace(tits.of_word(std::vector<Gen>(w.begin(), w.end())), w);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 3000; ++trial) {
      auto w = oracle::random_word(rng, d.rank(), static_cast<int>(rng() % 13));
      auto m = tits.of_word(w);
      Elem nf = normal_form(d, w);
      auto it = canon.find(m);
      if (it != canon.end()) {
        EXPECT_EQ(nf.raw(), it->second);
      }
      EXPECT_EQ(tits.of_word(nf.letters()), m);
      EXPECT_EQ(normal_form(d, nf.letters()), nf);
    }
  }
}

TEST(NormalForm, InvariantUnderAllowedSwaps) {
  auto d = diagrams::pentagon();
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    auto w = oracle::random_word(rng, d.rank(), static_cast<int>(rng() % 13));
    auto shuffled = w;
    for (int k = 0; k < 40 && shuffled.size() > 1; ++k) {
      std::size_t i = rng() % (shuffled.size() - 1);
      if (d.commute(shuffled[i], shuffled[i + 1])) std::swap(shuffled[i], shuffled[i + 1]);
    }
    EXPECT_EQ(normal_form(d, w), normal_form(d, shuffled));
  }
}

TEST(NormalForm, FactorsOfNormalFormsAreNormalForms) {
  auto d = diagrams::pentagon();
  Ball ball(d, 7);
  for (const auto& w : ball.elems())
    for (int i = 0; i <= w.length(); ++i)
      for (int j = i; j <= w.length(); ++j) {
        std::string f = w.raw().substr(i, j - i);
        ASSERT_EQ(normal_form(d, std::vector<Gen>(f.begin(), f.end())).raw(), f);
      }
}

TEST(Multiply, Examples) {
  auto d = A();
  EXPECT_EQ(multiply(d, E(d, "ab"), Elem()), E(d, "ab"));
  EXPECT_EQ(S(d, multiply(d, E(d, "a"), E(d, "ab"))), "b");
  EXPECT_EQ(S(d, multiply(d, E(d, "c"), E(d, "ab"))), "cab");
}

TEST(Multiply, GeneratorShortcutsAgreeWithGeneralProduct) {
  auto d = diagrams::pentagon();
  Ball ball(d, 5);
  for (const auto& w : ball.elems())
    for (Gen s = 0; s < d.rank(); ++s) {
      EXPECT_EQ(multiply_right(d, w, s), multiply(d, w, generator(d, s)));
      EXPECT_EQ(multiply_left(d, s, w), multiply(d, generator(d, s), w));
      EXPECT_EQ(is_left_descent(d, s, w), multiply_left(d, s, w).length() < w.length());
      EXPECT_EQ(is_right_descent(d, w, s), multiply_right(d, w, s).length() < w.length());
    }
}

TEST(Inverse, IsGroupInverse) {
  auto d = diagrams::pentagon();
  Ball ball(d, 5);
  for (const auto& w : ball.elems()) {
    EXPECT_TRUE(multiply(d, w, inverse(d, w)).is_identity());
    EXPECT_EQ(inverse(d, inverse(d, w)), w);
  }
}

TEST(StartsWith, Examples) {
  auto d = A();
  EXPECT_TRUE(starts_with(d, Elem(), E(d, "abcb")));
  EXPECT_TRUE(starts_with(d, E(d, "b"), E(d, "ab")));
  EXPECT_FALSE(starts_with(d, E(d, "c"), E(d, "ab")));
}

TEST(StartsWith, LengthInequality) {
  auto d = A();
  Ball ball(d, 6);
  for (const auto& v : ball.elems())
    for (const auto& w : ball.elems()) {
      int len = multiply(d, inverse(d, v), w).length();
      EXPECT_GE(len, w.length() - v.length());
      EXPECT_EQ(starts_with(d, v, w), len == w.length() - v.length());
    }
}

// v <= w iff sv <= sw, for s <= v and s <= w.
TEST(StartsWith, LeftTranslationInvariance) {
  for (const auto& d : {A(), diagrams::pentagon()}) {
    Ball ball(d, d.rank() == 3 ? 7 : 5);
    for (Gen s = 0; s < d.rank(); ++s) {
      std::vector<Elem> above;
      for (const auto& w : ball.elems())
        if (is_left_descent(d, s, w)) above.push_back(w);
      for (const auto& v : above)
        for (const auto& w : above)
          ASSERT_EQ(starts_with(d, v, w), starts_with(d, multiply_left(d, s, v), multiply_left(d, s, w)));
    }
  }
}

TEST(Join, Examples) {
  auto d = A();
  EXPECT_EQ(S(d, *join(d, E(d, "a"), E(d, "b"))), "ab");
  EXPECT_FALSE(join(d, E(d, "a"), E(d, "c")).has_value());
  for (const char* w : {"e", "a", "abcb", "cacb"}) {
    EXPECT_EQ(*join(d, E(d, w), E(d, w)), E(d, w));
    EXPECT_EQ(meet(d, E(d, w), E(d, w)), E(d, w));
  }
}

// Exhaustive: join is the least common upper bound and meet the greatest
// common lower bound, against brute-force search in a ball twice as large.
TEST(Join, LeastUpperBoundExhaustive) {
  auto d = A();
  const int r = 6;
  Ball big(d, 2 * r);
  const std::size_t small = big.ball_size(r);
  // below[u][v] for v in the small ball: v <= u.
  std::vector<std::vector<char>> below(big.size(), std::vector<char>(small, 0));
  for (std::size_t u = 0; u < big.size(); ++u)
    for (std::size_t v : big.prefix_indices(u))
      if (v < small) below[u][v] = 1;
  for (std::size_t i = 0; i < small; ++i)
    for (std::size_t j = 0; j < small; ++j) {
      const Elem& v = big.elem(i);
      const Elem& w = big.elem(j);
      auto jn = join(d, v, w);
      std::vector<std::size_t> uppers;
      for (std::size_t u = 0; u < big.size(); ++u)
        if (below[u][i] && below[u][j]) uppers.push_back(u);
      if (!jn) {
        ASSERT_TRUE(uppers.empty()) << S(d, v) << " " << S(d, w);
        continue;
      }
      ASSERT_TRUE(starts_with(d, v, *jn));
      ASSERT_TRUE(starts_with(d, w, *jn));
      for (std::size_t u : uppers) ASSERT_TRUE(starts_with(d, *jn, big.elem(u)));

      Elem m = meet(d, v, w);
      ASSERT_TRUE(starts_with(d, m, v));
      ASSERT_TRUE(starts_with(d, m, w));
      for (std::size_t x = 0; x < small; ++x)
        if (below[i][x] && below[j][x]) {
          ASSERT_TRUE(starts_with(d, big.elem(x), m));
        }
    }
}

TEST(Centralizes, Examples) {
  auto d = A();
  EXPECT_TRUE(centralizes(d, 0, E(d, "a")));
  EXPECT_TRUE(centralizes(d, 0, E(d, "b")));
  EXPECT_FALSE(centralizes(d, 0, E(d, "c")));
}

TEST(CoveringPath, Examples) {
  auto d = A();
  auto g = find_covering_closed_path(d);
  ASSERT_TRUE(g);
  EXPECT_EQ(S(d, *g), "acbc");
  EXPECT_TRUE(is_covering_closed_path(d, g->letters()));
  auto dinf = diagrams::d_infinity();
  EXPECT_EQ(S(dinf, *find_covering_closed_path(dinf)), "ab");
  EXPECT_FALSE(find_covering_closed_path(CoxeterDiagram({"a", "b"}, {{"a", "b"}})));
  EXPECT_FALSE(find_covering_closed_path(CoxeterDiagram({"a"}, {})));
}

TEST(CoveringPath, ExistsOnEveryIrreducibleCorpusDiagram) {
  for (const auto& d : diagrams::connected_corpus(5)) {
    auto g = find_covering_closed_path(d);
    if (d.rank() < 2) {
      EXPECT_FALSE(g);
      continue;
    }
    ASSERT_TRUE(g);
    EXPECT_TRUE(is_covering_closed_path(d, g->letters()));
    EXPECT_EQ(normal_form(d, g->letters()), *g);
    std::vector<Gen> power;
    for (int n = 1; n <= 4; ++n) {
      auto letters = g->letters();
      power.insert(power.end(), letters.begin(), letters.end());
      EXPECT_EQ(normal_form(d, power).length(), n * g->length());
    }
  }
}

TEST(Format, RoundTripsAndMultiCharNames) {
  auto d = diagrams::pentagon();
  Elem w = normal_form(d, {0, 2, 4, 1});
  std::string s = format_elem(d, w);
  EXPECT_NE(s.find('.'), std::string::npos);
  EXPECT_EQ(parse_elem(d, s), w);
  EXPECT_EQ(format_elem(d, Elem()), "e");
  EXPECT_THROW(parse_elem(A(), "abz"), ValidationError);
}

TEST(Corpus, ClassCountsPerRank) {
  std::map<int, int> per_rank;
  for (const auto& d : diagrams::connected_corpus(5)) ++per_rank[d.rank()];
  EXPECT_EQ(per_rank[1], 1);
  EXPECT_EQ(per_rank[2], 1);
  EXPECT_EQ(per_rank[3], 2);
  EXPECT_EQ(per_rank[4], 6);
  EXPECT_EQ(per_rank[5], 21);
}
