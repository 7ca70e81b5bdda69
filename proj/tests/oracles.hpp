#pragma once

// Independent reference implementations used only by the tests.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "rahecke/coxeter.hpp"

namespace oracle {

using rahecke::CoxeterDiagram;
using rahecke::Gen;

/// Tits representation: sigma_s(x) = x - 2 B(e_s, x) e_s with B(e_s, e_s) = 1,
/// B = 0 on commuting pairs and B = -1 on infinity pairs.  It is faithful, and
/// all entries are integers, so matrices serve as exact element keys.
class Tits {
 public:
  using Mat = std::vector<long long>;

  explicit Tits(const CoxeterDiagram& d) : d_(d), n_(d.rank()) {}

  Mat identity() const {
    Mat m(n_ * n_, 0);
    for (int i = 0; i < n_; ++i) m[i * n_ + i] = 1;
    return m;
  }

  long long b(Gen s, Gen t) const {
    if (s == t) return 1;
    return d_.commute(s, t) ? 0 : -1;
  }

  /// m * sigma_s (right multiplication by a generator).
  Mat right(const Mat& m, Gen s) const {
    // sigma_s e_j = e_j - 2 B(e_s, e_j) e_s, so only column s changes.
    Mat out = m;
    for (int j = 0; j < n_; ++j) {
      long long c = -2 * b(s, j);
      if (c == 0) continue;
      for (int i = 0; i < n_; ++i) out[i * n_ + j] += c * m[i * n_ + s];
    }
    return out;
  }

  Mat of_word(const std::vector<Gen>& w) const {
    Mat m = identity();
    for (Gen s : w) m = right(m, s);
    return m;
  }

 private:
  const CoxeterDiagram& d_;
  int n_;
};

/// Breadth-first search over the Cayley graph with matrix keys.  Returns, in
/// ShortLex order, the ShortLex-least word of every element of length <= n.
inline std::vector<std::string> shortlex_ball(const CoxeterDiagram& d, int n) {
  Tits t(d);
  std::map<Tits::Mat, std::string> seen;
  std::vector<std::pair<std::string, Tits::Mat>> frontier{{"", t.identity()}};
  seen.emplace(t.identity(), "");
  std::vector<std::string> out{""};
  for (int l = 0; l < n; ++l) {
    std::vector<std::pair<std::string, Tits::Mat>> next;
    for (const auto& [w, m] : frontier)
      for (Gen s = 0; s < d.rank(); ++s) {
        Tits::Mat ms = t.right(m, s);
        if (seen.count(ms)) continue;
        std::string ws = w + static_cast<char>(s);
        seen.emplace(ms, ws);
        next.emplace_back(ws, ms);
        out.push_back(ws);
      }
    frontier = std::move(next);
  }
  return out;
}

inline std::vector<Gen> random_word(std::mt19937_64& rng, int rank, int len) {
  std::vector<Gen> w(len);
  for (auto& s : w) s = static_cast<Gen>(rng() % static_cast<std::uint64_t>(rank));
  return w;
}

}  // namespace oracle
