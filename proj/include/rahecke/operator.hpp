#pragma once

// Truncated operators on span{delta_v : |v| <= n}.  Every operator carries an
// exactness radius r: its columns delta_v with |v| <= r agree with the true
// operator on l^2(W).  All identity checks compare only those columns.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "rahecke/ball.hpp"
#include "rahecke/coxeter.hpp"
#include "rahecke/error.hpp"
#include "rahecke/hecke.hpp"
#include "rahecke/rational.hpp"

namespace rahecke {

using BallPtr = std::shared_ptr<const Ball>;

inline BallPtr make_ball(const CoxeterDiagram& d, int radius, std::size_t cap = kDefaultBallCap) {
  return std::make_shared<const Ball>(d, radius, cap);
}

template <class S>
class TruncatedOperator {
 public:
  /// Sparse column: (row, value) sorted by row, no zeros.
  using Column = std::vector<std::pair<std::size_t, S>>;

  TruncatedOperator(BallPtr ball, std::vector<Column> cols, int exactness, int band)
      : ball_(std::move(ball)), cols_(std::move(cols)), exact_(std::min(exactness, ball_->radius())), band_(band) {
    if (cols_.size() != ball_->size()) throw Error("column count does not match ball size");
  }

  static TruncatedOperator identity(BallPtr ball) {
    std::vector<Column> cols(ball->size());
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j].emplace_back(j, S(1));
    int r = ball->radius();
    return TruncatedOperator(std::move(ball), std::move(cols), r, 0);
  }

  static TruncatedOperator zero(BallPtr ball) {
    std::vector<Column> cols(ball->size());
    int r = ball->radius();
    return TruncatedOperator(std::move(ball), std::move(cols), r, 0);
  }

  /// Diagonal operator with entries f(index).
  template <class F>
  static TruncatedOperator diagonal(BallPtr ball, F&& f) {
    std::vector<Column> cols(ball->size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      S v = f(j);
      if (!Scalar<S>::is_zero(v)) cols[j].emplace_back(j, v);
    }
    int r = ball->radius();
    return TruncatedOperator(std::move(ball), std::move(cols), r, 0);
  }

  const BallPtr& ball() const { return ball_; }
  std::size_t size() const { return cols_.size(); }
  /// Largest m such that columns delta_v with |v| <= m are exact; -1 if none.
  int exactness_radius() const { return exact_; }
  /// Maximal change of length between a column and its nonzero rows.
  int band() const { return band_; }
  /// Number of columns in the exactness domain.
  std::size_t domain_size() const { return exact_ < 0 ? 0 : ball_->ball_size(exact_); }
  const Column& column(std::size_t j) const { return cols_[j]; }

  S entry(std::size_t i, std::size_t j) const {
    const auto& c = cols_[j];
    auto it = std::lower_bound(c.begin(), c.end(), i, [](const auto& e, std::size_t r) { return e.first < r; });
    return it != c.end() && it->first == i ? it->second : S(0);
  }

  TruncatedOperator with_exactness(int r) const {
    TruncatedOperator out = *this;
    out.exact_ = std::min(r, exact_);
    return out;
  }

  friend TruncatedOperator operator*(const TruncatedOperator& x, const TruncatedOperator& y) {
    x.check_ball(y);
    std::vector<Column> cols(y.size());
    std::map<std::size_t, S> acc;
    for (std::size_t j = 0; j < y.size(); ++j) {
      acc.clear();
      for (const auto& [k, b] : y.cols_[j])
        for (const auto& [i, a] : x.cols_[k]) acc[i] += a * b;
      cols[j] = to_column(acc);
    }
    return TruncatedOperator(x.ball_, std::move(cols), std::min(y.exact_, x.exact_ - y.band_), x.band_ + y.band_);
  }

  friend TruncatedOperator operator+(const TruncatedOperator& x, const TruncatedOperator& y) { return combine(x, y, S(1)); }
  friend TruncatedOperator operator-(const TruncatedOperator& x, const TruncatedOperator& y) { return combine(x, y, S(-1)); }
  friend TruncatedOperator operator*(const S& k, const TruncatedOperator& x) {
    std::vector<Column> cols(x.size());
    if (!Scalar<S>::is_zero(k))
      for (std::size_t j = 0; j < x.size(); ++j)
        for (const auto& [i, a] : x.cols_[j]) cols[j].emplace_back(i, k * a);
    return TruncatedOperator(x.ball_, std::move(cols), x.exact_, x.band_);
  }

  /// Largest |x_ij - y_ij| over columns in the joint exactness domain.
  double residual(const TruncatedOperator& y) const {
    check_ball(y);
    int r = std::min(exact_, y.exact_);
    if (r < 0) return 0;
    double worst = 0;
    for (std::size_t j = 0; j < ball_->ball_size(r); ++j) {
      std::map<std::size_t, S> diff;
      for (const auto& [i, a] : cols_[j]) diff[i] += a;
      for (const auto& [i, b] : y.cols_[j]) diff[i] -= b;
      for (const auto& [i, v] : diff) worst = std::max(worst, std::abs(Scalar<S>::to_double(v)));
    }
    return worst;
  }

  /// Exact comparison on the joint exactness domain.
  bool equal_on_domain(const TruncatedOperator& y) const {
    check_ball(y);
    int r = std::min(exact_, y.exact_);
    if (r < 0) return true;
    for (std::size_t j = 0; j < ball_->ball_size(r); ++j)
      if (cols_[j] != y.cols_[j]) return false;
    return true;
  }

  /// Columns of the exactness domain, all rows.
  Eigen::MatrixXd domain_columns_dense() const {
    std::size_t m = domain_size();
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(size()), static_cast<Eigen::Index>(m));
    for (std::size_t j = 0; j < m; ++j)
      for (const auto& [i, a] : cols_[j]) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = Scalar<S>::to_double(a);
    return out;
  }

  /// Principal submatrix on the exactness domain.
  Eigen::MatrixXd domain_block_dense() const {
    std::size_t m = domain_size();
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    for (std::size_t j = 0; j < m; ++j)
      for (const auto& [i, a] : cols_[j])
        if (i < m) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = Scalar<S>::to_double(a);
    return out;
  }

  /// Principal submatrix on the exactness domain, exact entries.
  std::vector<std::vector<S>> domain_block() const {
    std::size_t m = domain_size();
    std::vector<std::vector<S>> out(m, std::vector<S>(m, S(0)));
    for (std::size_t j = 0; j < m; ++j)
      for (const auto& [i, a] : cols_[j])
        if (i < m) out[i][j] = a;
    return out;
  }

 private:
  static Column to_column(const std::map<std::size_t, S>& acc) {
    Column c;
    for (const auto& [i, v] : acc)
      if (!Scalar<S>::is_zero(v)) c.emplace_back(i, v);
    return c;
  }

  static TruncatedOperator combine(const TruncatedOperator& x, const TruncatedOperator& y, const S& sign) {
    x.check_ball(y);
    std::vector<Column> cols(x.size());
    std::map<std::size_t, S> acc;
    for (std::size_t j = 0; j < x.size(); ++j) {
      acc.clear();
      for (const auto& [i, a] : x.cols_[j]) acc[i] += a;
      for (const auto& [i, b] : y.cols_[j]) acc[i] += sign * b;
      cols[j] = to_column(acc);
    }
    return TruncatedOperator(x.ball_, std::move(cols), std::min(x.exact_, y.exact_), std::max(x.band_, y.band_));
  }

  void check_ball(const TruncatedOperator& y) const {
    if (ball_ != y.ball_ && (ball_->radius() != y.ball_->radius() || !(ball_->diagram() == y.ball_->diagram())))
      throw Error("operators live on different balls");
  }

  BallPtr ball_;
  std::vector<Column> cols_;
  int exact_;
  int band_;
};

namespace detail {

/// Sparse vector as a list of (index, value) pairs, duplicates allowed.
template <class S>
using Terms = std::vector<std::pair<std::size_t, S>>;

/// T_s^(q) applied to a sparse vector; p is p_s(q).  Terms leaving the ball
/// are dropped (they only arise outside the exactness domain).
template <class S>
void apply_generator(const Ball& ball, Gen s, const S& p, const Terms<S>& in, Terms<S>& out) {
  out.clear();
  for (const auto& [x, c] : in) {
    std::int64_t sx = ball.lmul(s, x);
    if (sx != Ball::kOutside) out.emplace_back(static_cast<std::size_t>(sx), c);
    if (ball.left_descent(s, x) && !Scalar<S>::is_zero(p)) out.emplace_back(x, p * c);
  }
}

}  // namespace detail

/// Matrix of a Hecke element on the ball.  Words sharing a suffix share the
/// work: T_w delta_v is built as T_s (T_y delta_v) with w = s y, and suffixes
/// of normal forms are normal forms.
template <class S>
TruncatedOperator<S> rep_hecke(const BallPtr& ball, const HeckeElement<S>& a) {
  const auto& d = ball->diagram();
  const auto& alg = *a.algebra();
  if (!(alg.diagram() == d)) throw ValidationError("element and ball use different diagrams");
  std::map<Elem, int> node_of;
  std::vector<Elem> nodes;
  for (const auto& [w, c] : a.terms()) {
    std::string raw = w.raw();
    while (true) {
      Elem y = Elem::from_canonical(raw);
      if (node_of.count(y)) break;
      node_of.emplace(y, 0);
      if (raw.empty()) break;
      raw.erase(0, 1);
    }
  }
  node_of.emplace(Elem(), 0);
  for (auto& [y, idx] : node_of) {
    idx = static_cast<int>(nodes.size());
    nodes.push_back(y);
  }
  // map iterates in ShortLex order, so every suffix precedes its extensions.
  std::vector<int> parent(nodes.size(), -1);
  for (std::size_t k = 1; k < nodes.size(); ++k)
    parent[k] = node_of.at(Elem::from_canonical(nodes[k].raw().substr(1)));

  std::vector<typename TruncatedOperator<S>::Column> cols(ball->size());
  std::vector<detail::Terms<S>> vec(nodes.size());
  std::map<std::size_t, S> acc;
  for (std::size_t v = 0; v < ball->size(); ++v) {
    vec[0].assign(1, {v, S(1)});
    for (std::size_t k = 1; k < nodes.size(); ++k) {
      Gen s = nodes[k].first();
      detail::apply_generator(*ball, s, alg.p(s), vec[static_cast<std::size_t>(parent[k])], vec[k]);
    }
    acc.clear();
    for (const auto& [w, c] : a.terms())
      for (const auto& [i, x] : vec[static_cast<std::size_t>(node_of.at(w))]) acc[i] += c * x;
    for (const auto& [i, x] : acc)
      if (!Scalar<S>::is_zero(x)) cols[v].emplace_back(i, x);
  }
  int band = a.max_length();
  return TruncatedOperator<S>(ball, std::move(cols), ball->radius() - band, band);
}

/// T_w^(1): delta_v -> delta_{wv}.
template <class S>
TruncatedOperator<S> rep_group(const BallPtr& ball, const Elem& w) {
  std::vector<typename TruncatedOperator<S>::Column> cols(ball->size());
  for (std::size_t v = 0; v < ball->size(); ++v) {
    std::int64_t x = static_cast<std::int64_t>(v);
    for (int i = w.length(); i-- > 0 && x != Ball::kOutside;) x = ball->lmul(w.letter(i), static_cast<std::size_t>(x));
    if (x != Ball::kOutside) cols[v].emplace_back(static_cast<std::size_t>(x), S(1));
  }
  return TruncatedOperator<S>(ball, std::move(cols), ball->radius() - w.length(), w.length());
}

/// Indices of all v in the ball with w <= v, found by walking up from w along
/// length-increasing right multiplications.  Empty if w lies outside.
inline std::vector<std::size_t> upper_set(const Ball& ball, const Elem& w) {
  std::vector<std::size_t> out;
  auto start = ball.find(w);
  if (!start) return out;
  std::vector<char> seen(ball.size(), 0);
  seen[*start] = 1;
  out.push_back(*start);
  for (std::size_t k = 0; k < out.size(); ++k) {
    std::size_t u = out[k];
    for (Gen s = 0; s < ball.diagram().rank(); ++s) {
      std::int64_t v = ball.rmul(s, u);
      if (v == Ball::kOutside || ball.length(static_cast<std::size_t>(v)) < ball.length(u)) continue;
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        out.push_back(static_cast<std::size_t>(v));
      }
    }
  }
  return out;
}

/// P_w: projection onto span{delta_v : w <= v}.
template <class S>
TruncatedOperator<S> proj_P(const BallPtr& ball, const Elem& w) {
  std::vector<char> in(ball->size(), 0);
  for (std::size_t v : upper_set(*ball, w)) in[v] = 1;
  return TruncatedOperator<S>::diagonal(ball, [&](std::size_t j) { return in[j] ? S(1) : S(0); });
}

/// w.X = T_w^(1) X T_{w^-1}^(1).
template <class S>
TruncatedOperator<S> conjugate_action(const Elem& w, const TruncatedOperator<S>& x) {
  const auto& ball = x.ball();
  return rep_group<S>(ball, w) * x * rep_group<S>(ball, inverse(ball->diagram(), w));
}

struct QOperator {
  TruncatedOperator<Rational> op;
  /// C with kappa_w(l) <= C l^{rank-2} for all w in the ball, l >= 1.
  double kappa_constant = 0;
  /// C * sum_{l > L} q^l l^{rank-2}.
  double tail_bound = 0;
};

/// max over v in the ball and 1 <= l <= |v| of kappa_v(l) / l^{rank-2}.
inline double fit_kappa_constant(const Ball& ball) {
  const int k = ball.diagram().rank();
  double c = 0;
  for (std::size_t v = 1; v < ball.size(); ++v) {
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(ball.length(v)) + 1, 0);
    for (std::size_t u : ball.prefix_indices(v)) ++counts[static_cast<std::size_t>(ball.length(u))];
    for (std::size_t l = 1; l < counts.size(); ++l)
      c = std::max(c, static_cast<double>(counts[l]) / std::pow(static_cast<double>(l), k - 2));
  }
  return c;
}

inline double kappa_tail(double c, double q, int cutoff, int rank) {
  double sum = 0;
  for (int l = cutoff + 1; l < cutoff + 100000; ++l) {
    double term = std::pow(q, l) * std::pow(static_cast<double>(l), rank - 2);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return c * sum;
}

/// Partial sum to l = L of Q_q^u = sum_l sum_{|w| = l, u <= w^-1} q^l P_w.
/// Diagonal: the entry at delta_v is sum of q^{|w|} over w <= v with
/// |w| <= L and u <= w^-1.
inline QOperator q_operator(const BallPtr& ball, const Elem& u, const Rational& q, int cutoff,
                            std::optional<double> kappa_constant = std::nullopt) {
  if (q <= 0 || q >= 1) throw ValidationError("q_operator needs 0 < q < 1");
  if (cutoff < 0 || cutoff > ball->radius()) throw ValidationError("cutoff must lie in [0, radius]");
  const auto& d = ball->diagram();
  Elem uinv = inverse(d, u);
  std::vector<char> ends(ball->size(), 0);
  for (std::size_t w = 0; w < ball->size(); ++w) ends[w] = ends_with(d, uinv, ball->elem(w)) ? 1 : 0;
  auto op = TruncatedOperator<Rational>::diagonal(ball, [&](std::size_t v) {
    Rational sum(0);
    for (std::size_t w : ball->prefix_indices(v))
      if (ball->length(w) <= cutoff && ends[w]) sum += rational_pow(q, static_cast<unsigned long>(ball->length(w)));
    return sum;
  });
  QOperator out{std::move(op)};
  out.kappa_constant = kappa_constant ? *kappa_constant : fit_kappa_constant(*ball);
  out.tail_bound = kappa_tail(out.kappa_constant, q.get_d(), cutoff, d.rank());
  return out;
}

/// Sparse matrix in compressed column form, used for large norm estimates.
struct SparseColumns {
  std::size_t rows = 0;
  std::vector<std::vector<std::pair<std::size_t, double>>> cols;
};

/// Largest singular value by power iteration on X^T X.
inline double power_norm(const SparseColumns& x, int max_iter = 500, double tol = 1e-11) {
  const std::size_t n = x.cols.size();
  if (n == 0) return 0;
  std::vector<double> v(n), w(x.rows), z(n);
  for (std::size_t j = 0; j < n; ++j) v[j] = 1.0 + 1e-3 * static_cast<double>(j % 7);
  double lambda = 0;
  for (int it = 0; it < max_iter; ++it) {
    double nv = 0;
    for (double a : v) nv += a * a;
    nv = std::sqrt(nv);
    if (nv == 0) return 0;
    for (double& a : v) a /= nv;
    std::fill(w.begin(), w.end(), 0.0);
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [i, a] : x.cols[j]) w[i] += a * v[j];
    double next = 0;
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0;
      for (const auto& [i, a] : x.cols[j]) s += a * w[i];
      z[j] = s;
      next += s * v[j];
    }
    v.swap(z);
    if (it > 5 && std::abs(next - lambda) <= tol * next) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  return std::sqrt(std::max(0.0, lambda));
}

/// Norm of the operator restricted to its exactness domain: a certified
/// lower bound on the norm of the untruncated operator.
template <class S>
double op_norm(const TruncatedOperator<S>& x) {
  std::size_t m = x.domain_size();
  if (m == 0) return 0;
  if (m <= 600 && x.size() <= 20000) {
    Eigen::MatrixXd a = x.domain_columns_dense();
    Eigen::MatrixXd g = a.transpose() * a;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g, Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
  }
  SparseColumns sc;
  sc.rows = x.size();
  sc.cols.resize(m);
  for (std::size_t j = 0; j < m; ++j)
    for (const auto& [i, a] : x.column(j)) sc.cols[j].emplace_back(i, Scalar<S>::to_double(a));
  return power_norm(sc);
}

struct SpectrumBounds {
  double min = 0, max = 0;
};

/// Eigenvalue range of the compression of a self-adjoint operator to its
/// exactness domain.
template <class S>
SpectrumBounds spectrum_bounds(const TruncatedOperator<S>& x, std::size_t max_dim = 4000) {
  std::size_t m = x.domain_size();
  if (m == 0) throw ValidationError("empty exactness domain");
  if (m > max_dim) throw ResourceError("compression of dimension " + std::to_string(m) + " exceeds the eigensolver cap");
  Eigen::MatrixXd a = x.domain_block_dense();
  double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw ValidationError("spectrum_bounds needs a self-adjoint operator");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  return {es.eigenvalues().minCoeff(), es.eigenvalues().maxCoeff()};
}

/// Exact test that a symmetric rational matrix is positive semidefinite,
/// by symmetric elimination.
inline bool is_psd(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] < 0) return false;
    if (a[k][k] == 0) {
      for (std::size_t j = k + 1; j < n; ++j)
        if (a[k][j] != 0) return false;
      continue;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return true;
}

}  // namespace rahecke
