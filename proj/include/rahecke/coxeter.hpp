#pragma once

// Right-angled Coxeter systems.  A diagram lists generators in a fixed order
// and the pairs that commute (m_st = 2); every other pair of distinct
// generators has m_st = infinity.  Group elements are stored as their
// ShortLex-least reduced word with respect to the generator order.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rahecke/error.hpp"

namespace rahecke {

using Gen = int;
using GenMask = std::uint64_t;

inline constexpr int kMaxRank = 64;

inline GenMask bit(Gen s) { return GenMask{1} << s; }

class CoxeterDiagram {
 public:
  CoxeterDiagram() = default;

  /// Throws ValidationError on duplicate names, self pairs and pairs that
  /// mention an unknown generator.
  CoxeterDiagram(std::vector<std::string> generators,
                 const std::vector<std::pair<std::string, std::string>>& commuting)
      : names_(std::move(generators)) {
    if (names_.empty()) throw ValidationError("diagram needs at least one generator");
    if (names_.size() > kMaxRank)
      throw ValidationError("rank " + std::to_string(names_.size()) + " exceeds the supported maximum of 64");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw ValidationError("empty generator name");
      if (names_[i].find('.') != std::string::npos)
        throw ValidationError("generator name '" + names_[i] + "' contains '.'");
      auto [it, inserted] = index_.emplace(names_[i], static_cast<Gen>(i));
      if (!inserted) throw ValidationError("duplicate generator '" + names_[i] + "'");
    }
    commute_.assign(names_.size(), 0);
    for (const auto& [a, b] : commuting) {
      Gen s = gen(a), t = gen(b);
      if (s == t) throw ValidationError("self pair (" + a + "," + a + ") in commuting relation");
      commute_[s] |= bit(t);
      commute_[t] |= bit(s);
    }
    single_char_ = std::all_of(names_.begin(), names_.end(), [](const std::string& n) { return n.size() == 1; });
  }

  int rank() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Gen s) const { return names_.at(s); }

  Gen gen(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) throw ValidationError("unknown generator '" + std::string(name) + "'");
    return it->second;
  }
  bool has_gen(std::string_view name) const { return index_.count(std::string(name)) != 0; }

  /// m_st = 2.  Irreflexive.
  bool commute(Gen s, Gen t) const { return (commute_[s] >> t) & 1U; }
  GenMask commute_mask(Gen s) const { return commute_[s]; }
  /// Letters that block s when moving it through a word: s itself and all
  /// generators joined to s by an infinity edge.
  GenMask blockers(Gen s) const { return ~commute_[s] & all_mask(); }
  GenMask all_mask() const { return rank() == 64 ? ~GenMask{0} : (GenMask{1} << rank()) - 1; }

  bool single_char_names() const { return single_char_; }

  std::vector<std::pair<Gen, Gen>> commuting_pairs() const {
    std::vector<std::pair<Gen, Gen>> out;
    for (Gen s = 0; s < rank(); ++s)
      for (Gen t = s + 1; t < rank(); ++t)
        if (commute(s, t)) out.emplace_back(s, t);
    return out;
  }

  /// Sub-diagram on the given generators (kept in original order).
  CoxeterDiagram induced(const std::vector<Gen>& gens) const {
    std::vector<Gen> sorted = gens;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> pairs;
    for (Gen s : sorted) names.push_back(names_[s]);
    for (std::size_t i = 0; i < sorted.size(); ++i)
      for (std::size_t j = i + 1; j < sorted.size(); ++j)
        if (commute(sorted[i], sorted[j])) pairs.emplace_back(names_[sorted[i]], names_[sorted[j]]);
    return CoxeterDiagram(std::move(names), pairs);
  }

  nlohmann::json to_json() const {
    nlohmann::json pairs = nlohmann::json::array();
    for (auto [s, t] : commuting_pairs()) pairs.push_back({names_[s], names_[t]});
    return {{"generators", names_}, {"commuting", pairs}};
  }

  friend bool operator==(const CoxeterDiagram& a, const CoxeterDiagram& b) {
    return a.names_ == b.names_ && a.commute_ == b.commute_;
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, Gen, std::less<>> index_;
  std::vector<GenMask> commute_;
  bool single_char_ = true;
};

/// {"generators": [...], "commuting": [[s, t], ...]}
inline CoxeterDiagram diagram_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("generators"))
    throw ValidationError("diagram JSON must be an object with a 'generators' array");
  const auto& g = j.at("generators");
  if (!g.is_array()) throw ValidationError("'generators' must be an array");
  std::vector<std::string> names;
  for (const auto& n : g) {
    if (!n.is_string()) throw ValidationError("generator names must be strings");
    names.push_back(n.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  if (j.contains("commuting")) {
    const auto& c = j.at("commuting");
    if (!c.is_array()) throw ValidationError("'commuting' must be an array of pairs");
    for (const auto& p : c) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
        throw ValidationError("each commuting entry must be a pair of generator names");
      pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
  }
  return CoxeterDiagram(std::move(names), pairs);
}

inline CoxeterDiagram parse_diagram(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("diagram is not valid JSON: ") + e.what());
  }
  return diagram_from_json(j);
}

/// Connected components of the graph whose edges are the infinity pairs.
inline std::vector<std::vector<Gen>> component_generators(const CoxeterDiagram& d) {
  std::vector<int> comp(d.rank(), -1);
  std::vector<std::vector<Gen>> out;
  for (Gen root = 0; root < d.rank(); ++root) {
    if (comp[root] >= 0) continue;
    std::vector<Gen> members, stack{root};
    comp[root] = static_cast<int>(out.size());
    while (!stack.empty()) {
      Gen s = stack.back();
      stack.pop_back();
      members.push_back(s);
      for (Gen t = 0; t < d.rank(); ++t)
        if (t != s && !d.commute(s, t) && comp[t] < 0) {
          comp[t] = comp[root];
          stack.push_back(t);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

inline bool is_irreducible(const CoxeterDiagram& d) { return component_generators(d).size() == 1; }

inline std::vector<CoxeterDiagram> components(const CoxeterDiagram& d) {
  std::vector<CoxeterDiagram> out;
  for (const auto& gens : component_generators(d)) out.push_back(d.induced(gens));
  return out;
}

/// A group element, held as its ShortLex-least reduced word.  Letters are
/// generator indices stored in the bytes of a std::string, which gives cheap
/// hashing and lexicographic comparison for free.
class Elem {
 public:
  Elem() = default;

  /// Caller guarantees `letters` is already the canonical word.
  static Elem from_canonical(std::string letters) {
    Elem e;
    e.w_ = std::move(letters);
    return e;
  }

  int length() const { return static_cast<int>(w_.size()); }
  bool is_identity() const { return w_.empty(); }
  Gen letter(int i) const { return static_cast<unsigned char>(w_[i]); }
  Gen first() const { return letter(0); }
  Gen last() const { return letter(length() - 1); }
  const std::string& raw() const { return w_; }

  std::vector<Gen> letters() const {
    std::vector<Gen> out;
    for (int i = 0; i < length(); ++i) out.push_back(letter(i));
    return out;
  }

  GenMask support() const {
    GenMask m = 0;
    for (int i = 0; i < length(); ++i) m |= bit(letter(i));
    return m;
  }

  friend bool operator==(const Elem&, const Elem&) = default;
  /// ShortLex: length first, then lexicographic in the generator order.
  friend std::strong_ordering operator<=>(const Elem& a, const Elem& b) {
    if (a.w_.size() != b.w_.size()) return a.w_.size() <=> b.w_.size();
    int c = a.w_.compare(b.w_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  std::string w_;
};

struct ElemHash {
  std::size_t operator()(const Elem& e) const noexcept { return std::hash<std::string>{}(e.raw()); }
};

namespace detail {

/// Free reduction using only commutations: a new letter cancels against the
/// last occurrence of itself if everything after that occurrence commutes
/// with it.
inline std::string reduce_word(const CoxeterDiagram& d, const std::vector<Gen>& letters) {
  std::string r;
  r.reserve(letters.size());
  for (Gen s : letters) {
    bool cancelled = false;
    for (std::size_t k = r.size(); k-- > 0;) {
      Gen t = static_cast<unsigned char>(r[k]);
      if (t == s) {
        r.erase(k, 1);
        cancelled = true;
        break;
      }
      if (!d.commute(s, t)) break;
    }
    if (!cancelled) r.push_back(static_cast<char>(s));
  }
  return r;
}

/// Lexicographically least rearrangement of a reduced word under the
/// commutations of the diagram: repeatedly emit the smallest letter that can
/// be moved to the front.
inline std::string lex_min(const CoxeterDiagram& d, std::string reduced) {
  std::string out;
  out.reserve(reduced.size());
  while (!reduced.empty()) {
    GenMask seen = 0;
    int best_pos = -1;
    Gen best = kMaxRank;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      Gen s = static_cast<unsigned char>(reduced[i]);
      if ((seen & d.blockers(s)) == 0 && s < best) {
        best = s;
        best_pos = static_cast<int>(i);
      }
      seen |= bit(s);
    }
    out.push_back(static_cast<char>(best));
    reduced.erase(static_cast<std::size_t>(best_pos), 1);
  }
  return out;
}

}  // namespace detail

inline Elem normal_form(const CoxeterDiagram& d, const std::vector<Gen>& letters) {
  for (Gen s : letters)
    if (s < 0 || s >= d.rank()) throw ValidationError("letter index out of range");
  return Elem::from_canonical(detail::lex_min(d, detail::reduce_word(d, letters)));
}

inline Elem generator(const CoxeterDiagram& d, Gen s) { return normal_form(d, {s}); }

inline Elem multiply(const CoxeterDiagram& d, const Elem& v, const Elem& w) {
  if (v.is_identity()) return w;
  if (w.is_identity()) return v;
  std::vector<Gen> letters = v.letters();
  for (int i = 0; i < w.length(); ++i) letters.push_back(w.letter(i));
  return normal_form(d, letters);
}

inline Elem inverse(const CoxeterDiagram& d, const Elem& w) {
  std::vector<Gen> letters = w.letters();
  std::reverse(letters.begin(), letters.end());
  return Elem::from_canonical(detail::lex_min(d, std::string(letters.begin(), letters.end())));
}

/// w * s in O(|w|).  A right multiplication either cancels an occurrence of
/// s from the commuting tail or inserts s before the first larger letter of
/// that tail.
inline Elem multiply_right(const CoxeterDiagram& d, const Elem& w, Gen s) {
  std::string r = w.raw();
  std::size_t k = r.size();
  std::size_t insert_at = r.size();
  while (k-- > 0) {
    Gen t = static_cast<unsigned char>(r[k]);
    if (t == s) {
      r.erase(k, 1);
      return Elem::from_canonical(std::move(r));
    }
    if (!d.commute(s, t)) break;
    if (t > s) insert_at = k;
  }
  r.insert(insert_at, 1, static_cast<char>(s));
  return Elem::from_canonical(std::move(r));
}

/// s * w.
inline Elem multiply_left(const CoxeterDiagram& d, Gen s, const Elem& w) {
  std::vector<Gen> letters;
  letters.reserve(w.length() + 1);
  letters.push_back(s);
  for (int i = 0; i < w.length(); ++i) letters.push_back(w.letter(i));
  return normal_form(d, letters);
}

/// s is a left descent of w (|sw| < |w|): some occurrence of s can be moved
/// to the front.
inline bool is_left_descent(const CoxeterDiagram& d, Gen s, const Elem& w) {
  for (int i = 0; i < w.length(); ++i) {
    Gen t = w.letter(i);
    if (t == s) return true;
    if (!d.commute(s, t)) return false;
  }
  return false;
}

inline bool is_right_descent(const CoxeterDiagram& d, const Elem& w, Gen s) {
  for (int i = w.length(); i-- > 0;) {
    Gen t = w.letter(i);
    if (t == s) return true;
    if (!d.commute(s, t)) return false;
  }
  return false;
}

inline GenMask left_descents(const CoxeterDiagram& d, const Elem& w) {
  GenMask out = 0;
  for (Gen s = 0; s < d.rank(); ++s)
    if (is_left_descent(d, s, w)) out |= bit(s);
  return out;
}

inline GenMask right_descents(const CoxeterDiagram& d, const Elem& w) {
  GenMask out = 0;
  for (Gen s = 0; s < d.rank(); ++s)
    if (is_right_descent(d, w, s)) out |= bit(s);
  return out;
}

/// Weak right Bruhat order: v <= w iff |v^-1 w| = |w| - |v|.
inline bool starts_with(const CoxeterDiagram& d, const Elem& v, const Elem& w) {
  if (v.length() > w.length()) return false;
  if (v.is_identity()) return true;
  return multiply(d, inverse(d, v), w).length() == w.length() - v.length();
}

/// Least upper bound in the weak right order, if one exists.
///
/// Walk along a reduced word of w, maintaining u >= v with u >= (prefix of w
/// read so far) =: p.  For the next letter s, set y = p^-1 u.  If s <= y we
/// are done with s; if s commutes with every letter of y then u s is the new
/// least bound; otherwise s and y have no common upper bound and neither do
/// v and w.
inline std::optional<Elem> join(const CoxeterDiagram& d, const Elem& v, const Elem& w) {
  Elem u = v;
  Elem p;
  for (int i = 0; i < w.length(); ++i) {
    Gen s = w.letter(i);
    Elem y = multiply(d, inverse(d, p), u);
    if (!is_left_descent(d, s, y)) {
      if ((y.support() & d.blockers(s)) != 0) return std::nullopt;
      u = multiply_right(d, u, s);
    }
    p = multiply_right(d, p, s);
  }
  return u;
}

/// Greatest lower bound: greedily extend a common prefix.
inline Elem meet(const CoxeterDiagram& d, const Elem& v, const Elem& w) {
  Elem m;
  Elem rv = v, rw = w;  // m^-1 v, m^-1 w
  while (true) {
    GenMask common = left_descents(d, rv) & left_descents(d, rw);
    if (common == 0) return m;
    Gen s = std::countr_zero(common);
    m = multiply_right(d, m, s);
    rv = multiply_left(d, s, rv);
    rw = multiply_left(d, s, rw);
  }
}

inline bool centralizes(const CoxeterDiagram& d, Gen s, const Elem& w) {
  return multiply_left(d, s, w) == multiply_right(d, w, s);
}

/// A closed path in the diagram that visits every generator: an Euler-style
/// depth-first walk over the infinity graph, rooted at the first generator,
/// that records return steps and drops the final return to the root.
/// Consecutive letters (and first/last) are joined by infinity edges.
inline std::optional<Elem> find_covering_closed_path(const CoxeterDiagram& d) {
  if (d.rank() < 2 || !is_irreducible(d)) return std::nullopt;
  std::vector<Gen> walk;
  std::vector<bool> visited(d.rank(), false);
  std::function<void(Gen)> dfs = [&](Gen s) {
    visited[s] = true;
    walk.push_back(s);
    for (Gen t = 0; t < d.rank(); ++t) {
      if (t == s || d.commute(s, t) || visited[t]) continue;
      dfs(t);
      walk.push_back(s);
    }
  };
  dfs(0);
  walk.pop_back();
  // Consecutive letters never commute, so the word is reduced and already
  // in ShortLex normal form.
  return Elem::from_canonical(std::string(walk.begin(), walk.end()));
}

/// Checks the three defining conditions of a covering closed path.
inline bool is_covering_closed_path(const CoxeterDiagram& d, const std::vector<Gen>& word) {
  if (word.size() < 2) return false;
  GenMask seen = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    seen |= bit(word[i]);
    Gen a = word[i], b = word[(i + 1) % word.size()];
    if (a == b || d.commute(a, b)) return false;
  }
  return seen == d.all_mask();
}

/// Words print as concatenated names when every name is one character,
/// otherwise dot-separated; the identity prints as "e".
inline std::string format_elem(const CoxeterDiagram& d, const Elem& w) {
  if (w.is_identity()) return "e";
  std::string out;
  for (int i = 0; i < w.length(); ++i) {
    if (i > 0 && !d.single_char_names()) out.push_back('.');
    out += d.name(w.letter(i));
  }
  return out;
}

/// Inverse of format_elem for arbitrary (not necessarily reduced) words.
/// "e" or "" is the identity unless a generator is literally named "e".
inline std::vector<Gen> parse_word(const CoxeterDiagram& d, std::string_view text) {
  std::vector<Gen> out;
  if (text.empty() || (text == "e" && !d.has_gen("e"))) return out;
  if (text.find('.') != std::string_view::npos || !d.single_char_names()) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t dot = text.find('.', start);
      std::string_view piece = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
      out.push_back(d.gen(piece));
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
    return out;
  }
  for (char c : text) out.push_back(d.gen(std::string_view(&c, 1)));
  return out;
}

inline Elem parse_elem(const CoxeterDiagram& d, std::string_view text) { return normal_form(d, parse_word(d, text)); }

}  // namespace rahecke
