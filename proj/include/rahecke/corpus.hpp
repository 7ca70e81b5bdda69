#pragma once

// Named diagrams used throughout the tests and the acceptance suite, and the
// corpus of all irreducible right-angled diagrams of rank <= 5 up to
// isomorphism.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "rahecke/coxeter.hpp"

namespace rahecke::diagrams {

/// Free product of two order-2 groups.
inline CoxeterDiagram d_infinity() { return CoxeterDiagram({"a", "b"}, {}); }

/// a and b commute; c is free against both.
inline CoxeterDiagram diagram_a() { return CoxeterDiagram({"a", "b", "c"}, {{"a", "b"}}); }

/// Free product of n order-2 groups.
inline CoxeterDiagram free_product(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(n <= 4 ? std::string(1, static_cast<char>('a' + i)) : "s" + std::to_string(i + 1));
  return CoxeterDiagram(names, {});
}

/// Five generators commuting along a 5-cycle.
inline CoxeterDiagram pentagon() {
  std::vector<std::string> names{"v1", "v2", "v3", "v4", "v5"};
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < 5; ++i) pairs.emplace_back(names[i], names[(i + 1) % 5]);
  return CoxeterDiagram(names, pairs);
}

/// Diagram on n generators whose infinity edges are the given bit set over
/// the pairs (i, j), i < j, in lexicographic order.
inline CoxeterDiagram from_infinity_edges(int n, std::uint32_t edges) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(n <= 4 ? std::string(1, static_cast<char>('a' + i)) : "s" + std::to_string(i + 1));
  std::vector<std::pair<std::string, std::string>> commuting;
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      if (!((edges >> k) & 1U)) commuting.emplace_back(names[i], names[j]);
  return CoxeterDiagram(names, commuting);
}

namespace detail {

inline std::uint32_t relabel(int n, std::uint32_t edges, const std::vector<int>& perm) {
  auto pair_index = [n](int i, int j) {
    if (i > j) std::swap(i, j);
    return i * n - i * (i + 1) / 2 + (j - i - 1);
  };
  std::uint32_t out = 0;
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      if ((edges >> k) & 1U) out |= std::uint32_t{1} << pair_index(perm[i], perm[j]);
  return out;
}

}  // namespace detail

/// One representative per isomorphism class of connected infinity graphs on
/// 1..max_rank vertices (1, 1, 2, 6, 21 classes for ranks 1..5).
inline std::vector<CoxeterDiagram> connected_corpus(int max_rank = 5) {
  std::vector<CoxeterDiagram> out;
  for (int n = 1; n <= max_rank; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::vector<int> perm(n);
    std::set<std::uint32_t> seen;
    for (std::uint32_t edges = 0; edges < (std::uint32_t{1} << pairs); ++edges) {
      std::iota(perm.begin(), perm.end(), 0);
      std::uint32_t canon = edges;
      do {
        canon = std::min(canon, detail::relabel(n, edges, perm));
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (!seen.insert(canon).second) continue;
      CoxeterDiagram d = from_infinity_edges(n, canon);
      if (is_irreducible(d)) out.push_back(d);
    }
  }
  return out;
}

}  // namespace rahecke::diagrams
