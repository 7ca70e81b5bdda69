#pragma once

// Enumeration of W by length.  ShortLex normal forms are closed under taking
// prefixes, so they form a tree rooted at e; appending a letter s to a normal
// form w gives a normal form iff s cannot travel left through the commuting
// tail of w to cancel or to overtake a larger letter.  Walking that tree
// breadth-first by letter yields ShortLex order without any deduplication.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "rahecke/coxeter.hpp"
#include "rahecke/error.hpp"
#include "rahecke/rational.hpp"

namespace rahecke {

inline constexpr std::size_t kDefaultBallCap = 2'000'000;

/// True iff raw + s is again a ShortLex normal form (raw must be one).
inline bool can_append(const CoxeterDiagram& d, const std::string& raw, Gen s) {
  for (std::size_t k = raw.size(); k-- > 0;) {
    Gen t = static_cast<unsigned char>(raw[k]);
    if (t == s) return false;
    if (!d.commute(s, t)) return true;
    if (t > s) return false;
  }
  return true;
}

/// Depth-first walk over all normal forms of length <= n.  `visit` receives
/// the raw letter string of each element exactly once.
template <class Visit>
void for_each_normal_form(const CoxeterDiagram& d, int n, Visit&& visit) {
  std::string word;
  word.reserve(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self) -> void {
    visit(static_cast<const std::string&>(word));
    if (static_cast<int>(word.size()) == n) return;
    for (Gen s = 0; s < d.rank(); ++s) {
      if (!can_append(d, word, s)) continue;
      word.push_back(static_cast<char>(s));
      self(self);
      word.pop_back();
    }
  };
  rec(rec);
}

/// Sizes of the spheres of radius 0..n.
inline std::vector<std::uint64_t> sphere_counts(const CoxeterDiagram& d, int n) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  for_each_normal_form(d, n, [&](const std::string& w) { ++counts[w.size()]; });
  return counts;
}

/// Per length, the number of elements with each letter-multiplicity vector.
/// Keys hold one byte per generator.
using MonomialCounts = std::unordered_map<std::string, std::uint64_t>;

inline std::vector<MonomialCounts> sphere_monomials(const CoxeterDiagram& d, int n) {
  std::vector<MonomialCounts> out(static_cast<std::size_t>(n) + 1);
  for_each_normal_form(d, n, [&](const std::string& w) {
    std::string key(static_cast<std::size_t>(d.rank()), '\0');
    for (char c : w) ++key[static_cast<unsigned char>(c)];
    ++out[w.size()][key];
  });
  return out;
}

inline Rational monomial_value(const std::string& key, const std::vector<Rational>& q) {
  Rational v(1);
  for (std::size_t s = 0; s < key.size(); ++s)
    if (key[s] != 0) v *= rational_pow(q[s], static_cast<unsigned char>(key[s]));
  return v;
}

/// a_l(q) = sum of q_w over |w| = l, for l = 0..n.
inline std::vector<Rational> sphere_weights(const CoxeterDiagram& d, const std::vector<Rational>& q, int n) {
  if (static_cast<int>(q.size()) != d.rank()) throw ValidationError("parameter size does not match rank");
  std::vector<Rational> out;
  for (const auto& level : sphere_monomials(d, n)) {
    Rational sum(0);
    for (const auto& [key, count] : level) sum += monomial_value(key, q) * Rational(Integer(std::to_string(count)));
    out.push_back(sum);
  }
  return out;
}

inline Rational sphere_weight(const CoxeterDiagram& d, const std::vector<Rational>& q, int l) {
  return sphere_weights(d, q, l).back();
}

inline Rational word_weight(const Elem& w, const std::vector<Rational>& q) {
  Rational v(1);
  for (int i = 0; i < w.length(); ++i) v *= q[w.letter(i)];
  return v;
}

/// w ends with v in the weak left order, i.e. |w v^-1| = |w| - |v|.
inline bool ends_with(const CoxeterDiagram& d, const Elem& v, const Elem& w) {
  if (v.length() > w.length()) return false;
  Elem cur = w;
  for (int i = v.length(); i-- > 0;) {
    Gen s = v.letter(i);
    if (!is_right_descent(d, cur, s)) return false;
    cur = multiply_right(d, cur, s);
  }
  return true;
}

/// Sum of q_w over |w| = l with g <= w^-1, for l = 0..n.
inline std::vector<Rational> restricted_sphere_weights(const CoxeterDiagram& d, const std::vector<Rational>& q,
                                                       int n, const Elem& g) {
  if (static_cast<int>(q.size()) != d.rank()) throw ValidationError("parameter size does not match rank");
  Elem ginv = inverse(d, g);
  std::vector<MonomialCounts> levels(static_cast<std::size_t>(n) + 1);
  for_each_normal_form(d, n, [&](const std::string& raw) {
    if (static_cast<int>(raw.size()) < g.length()) return;
    if (!ends_with(d, ginv, Elem::from_canonical(raw))) return;
    std::string key(static_cast<std::size_t>(d.rank()), '\0');
    for (char c : raw) ++key[static_cast<unsigned char>(c)];
    ++levels[raw.size()][key];
  });
  std::vector<Rational> out;
  for (const auto& level : levels) {
    Rational sum(0);
    for (const auto& [key, count] : level) sum += monomial_value(key, q) * Rational(Integer(std::to_string(count)));
    out.push_back(sum);
  }
  return out;
}

inline Rational restricted_sphere_weight(const CoxeterDiagram& d, const std::vector<Rational>& q, int l,
                                         const Elem& g) {
  return restricted_sphere_weights(d, q, l, g).back();
}

/// All v <= w (prefixes in the weak right order).
inline std::set<Elem> prefixes(const CoxeterDiagram& d, const Elem& w) {
  std::set<Elem> seen{w};
  std::vector<Elem> stack{w};
  while (!stack.empty()) {
    Elem u = stack.back();
    stack.pop_back();
    GenMask desc = right_descents(d, u);
    for (Gen s = 0; s < d.rank(); ++s) {
      if (!((desc >> s) & 1U)) continue;
      Elem v = multiply_right(d, u, s);
      if (seen.insert(v).second) stack.push_back(v);
    }
  }
  return seen;
}

/// kappa_w(l) = #{v <= w : |v| = l}.
inline std::uint64_t kappa(const CoxeterDiagram& d, const Elem& w, int l) {
  std::uint64_t count = 0;
  for (const auto& v : prefixes(d, w))
    if (v.length() == l) ++count;
  return count;
}

/// The ball {w : |w| <= n} in ShortLex order with multiplication tables.
class Ball {
 public:
  static constexpr std::int64_t kOutside = -1;

  Ball(const CoxeterDiagram& d, int radius, std::size_t cap = kDefaultBallCap) : d_(d), radius_(radius) {
    if (radius < 0) throw ValidationError("ball radius must be >= 0");
    elems_.push_back(Elem());
    offsets_.push_back(0);
    std::size_t begin = 0;
    for (int l = 0; l < radius; ++l) {
      std::size_t end = elems_.size();
      offsets_.push_back(end);
      for (std::size_t i = begin; i < end; ++i) {
        const std::string raw = elems_[i].raw();
        for (Gen s = 0; s < d.rank(); ++s) {
          if (!can_append(d, raw, s)) continue;
          if (elems_.size() >= cap)
            throw ResourceError("ball of radius " + std::to_string(radius) + " exceeds the cap of " +
                                std::to_string(cap) + " elements");
          elems_.push_back(Elem::from_canonical(raw + static_cast<char>(s)));
        }
      }
      begin = end;
    }
    offsets_.push_back(elems_.size());
    index_.reserve(elems_.size());
    for (std::size_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i].raw(), i);

    const std::size_t r = static_cast<std::size_t>(d.rank());
    lmul_.assign(elems_.size() * r, kOutside);
    rmul_.assign(elems_.size() * r, kOutside);
    for (std::size_t i = 0; i < elems_.size(); ++i)
      for (Gen s = 0; s < d.rank(); ++s) {
        if (auto j = find(multiply_left(d, s, elems_[i]))) lmul_[i * r + s] = static_cast<std::int64_t>(*j);
        if (auto j = find(multiply_right(d, elems_[i], s))) rmul_[i * r + s] = static_cast<std::int64_t>(*j);
      }
  }

  const CoxeterDiagram& diagram() const { return d_; }
  int radius() const { return radius_; }
  std::size_t size() const { return elems_.size(); }
  const Elem& elem(std::size_t i) const { return elems_[i]; }
  const std::vector<Elem>& elems() const { return elems_; }
  int length(std::size_t i) const { return elems_[i].length(); }

  /// Index range [begin, end) of the sphere of radius l.
  std::size_t sphere_begin(int l) const { return offsets_.at(static_cast<std::size_t>(l)); }
  std::size_t sphere_end(int l) const { return offsets_.at(static_cast<std::size_t>(l) + 1); }
  /// Number of elements of length <= l.
  std::size_t ball_size(int l) const { return sphere_end(std::min(l, radius_)); }

  std::vector<std::size_t> sphere_sizes() const {
    std::vector<std::size_t> out;
    for (int l = 0; l <= radius_; ++l) out.push_back(sphere_end(l) - sphere_begin(l));
    return out;
  }

  std::optional<std::size_t> find(const Elem& w) const {
    auto it = index_.find(w.raw());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index(const Elem& w) const {
    auto i = find(w);
    if (!i) throw ValidationError("element of length " + std::to_string(w.length()) + " lies outside the ball");
    return *i;
  }

  /// Index of s*elem(i), or kOutside.
  std::int64_t lmul(Gen s, std::size_t i) const { return lmul_[i * static_cast<std::size_t>(d_.rank()) + s]; }
  /// Index of elem(i)*s, or kOutside.
  std::int64_t rmul(Gen s, std::size_t i) const { return rmul_[i * static_cast<std::size_t>(d_.rank()) + s]; }

  bool left_descent(Gen s, std::size_t i) const {
    std::int64_t j = lmul(s, i);
    return j != kOutside && length(static_cast<std::size_t>(j)) < length(i);
  }

  /// Indices of all v <= elem(i).
  std::vector<std::size_t> prefix_indices(std::size_t i) const {
    std::vector<std::size_t> out{i}, stack{i};
    std::set<std::size_t> seen{i};
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (Gen s = 0; s < d_.rank(); ++s) {
        std::int64_t v = rmul(s, u);
        if (v == kOutside || length(static_cast<std::size_t>(v)) > length(u)) continue;
        if (seen.insert(static_cast<std::size_t>(v)).second) {
          out.push_back(static_cast<std::size_t>(v));
          stack.push_back(static_cast<std::size_t>(v));
        }
      }
    }
    return out;
  }

 private:
  CoxeterDiagram d_;
  int radius_;
  std::vector<Elem> elems_;
  std::vector<std::size_t> offsets_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::int64_t> lmul_, rmul_;
};

}  // namespace rahecke
