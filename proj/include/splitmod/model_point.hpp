#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splitmod/frame.hpp"
#include "splitmod/truncated_series.hpp"

namespace splitmod {

// A candidate point (F, G) of the special fiber, or of a lift over a ring.
// pi is the value of the uniformizer in the coefficient ring (zero on the
// special fiber).
template <class T>
struct ModelPoint {
  const Frame* frame{nullptr};
  int s{0};
  T pi{};
  Subspace<T> F;
  Subspace<T> G;
  std::string ring;

  int n() const { return frame->n(); }
  int r() const { return frame->n() - s; }
};

struct StratumLabel {
  int h{0};
  int l{0};
  friend bool operator==(const StratumLabel&, const StratumLabel&) = default;
  friend auto operator<=>(const StratumLabel&, const StratumLabel&) = default;
  std::string to_string() const { return "(" + std::to_string(h) + "," + std::to_string(l) + ")"; }
};

struct ValidationReport {
  bool ranks{false};
  bool containment{false};
  bool isotropy{false};
  bool splitting_a{false};  // (t + pi) F inside G
  bool splitting_b{false};  // (t - pi) G = 0
  std::optional<bool> spin;      // empty when skipped (non-field ring)
  std::optional<bool> kottwitz;  // empty when not requested
  std::string spin_note;
  std::string splitting_a_operator{"t+pi"};
  std::string splitting_b_operator{"t-pi"};
  int rank_tF{-1};  // rank of (t + pi) on F when defined

  bool conditions_1_to_3() const { return ranks && containment && isotropy && splitting_a && splitting_b; }
  bool verdict() const {
    return conditions_1_to_3() && spin.value_or(true) && kottwitz.value_or(true);
  }
  // First failing condition in a fixed order, or "" when all enabled ones pass.
  std::string first_failure() const {
    if (!ranks || !containment) return "rank";
    if (!isotropy) return "isotropy";
    if (!splitting_a) return "splitting-a";
    if (!splitting_b) return "splitting-b";
    if (spin.has_value() && !*spin) return "spin";
    if (kottwitz.has_value() && !*kottwitz) return "kottwitz";
    return "";
  }
};

// Restriction of a linear map A to a submodule with canonical basis; throws
// InvalidPoint when the submodule is not A-stable.
template <class T>
Matrix<T> restrict_to(const Matrix<T>& a, const Subspace<T>& u) {
  Matrix<T> img = u.basis() * a.transpose();  // rows: images of basis rows
  Matrix<T> m(u.context(), u.dim(), u.dim());
  for (int i = 0; i < u.dim(); ++i) {
    auto row = img.row_vec(i);
    for (int k = 0; k < u.dim(); ++k) m(k, i) = row[static_cast<std::size_t>(u.pivots()[k])];
    auto residual = u.reduce(row);
    for (const auto& x : residual)
      if (!x.is_zero()) throw Error(ErrorKind::InvalidPoint, "subspace is not stable under the map");
  }
  return m;
}

// Coefficients of (X + pi)^r (X - pi)^s, leading first.
template <class T>
std::vector<T> kottwitz_polynomial(typename T::Context ctx, const T& pi, int r, int s) {
  std::vector<T> p{T::one(ctx)};
  auto mul_linear = [&](const T& c) {  // times (X + c)
    std::vector<T> q(p.size() + 1, T::zero(ctx));
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i] += p[i];
      q[i + 1] += c * p[i];
    }
    p = std::move(q);
  };
  for (int i = 0; i < r; ++i) mul_linear(pi);
  for (int i = 0; i < s; ++i) mul_linear(-pi);
  return p;
}

template <class T>
ValidationReport validate(const Frame& fr, const Subspace<T>& F, const Subspace<T>& G, int s, const T& pi,
                          bool kottwitz = false) {
  if (F.ambient() != fr.dim() || G.ambient() != fr.dim())
    throw Error(ErrorKind::AmbientMismatch, "subspaces do not live in the frame");
  const auto ctx = F.context();
  const int n = fr.n();
  ValidationReport rep;
  rep.ranks = F.dim() == n && G.dim() == s;
  rep.containment = F.contains(G);
  Matrix<T> sym = fr.gram_sym().to<T>(ctx);
  rep.isotropy = (F.basis() * sym * F.basis().transpose()).is_zero();
  Matrix<T> tp = fr.t_shift<T>(ctx, pi, pi);
  Matrix<T> tm = fr.t_shift<T>(ctx, pi, -pi);
  rep.splitting_a = G.contains_columns(tp * F.basis_columns());
  rep.splitting_b = (tm * G.basis_columns()).is_zero();
  if constexpr (T::is_field) {
    rep.rank_tF = rank(tp * F.basis_columns());
    rep.spin = (rep.rank_tF - s) % 2 == 0;
  } else {
    rep.spin_note = "skipped: spin is only evaluated at field-valued points";
  }
  if (kottwitz) {
    bool ok = false;
    try {
      auto cp = charpoly(restrict_to(fr.t_matrix<T>(ctx, pi), F));
      ok = cp == kottwitz_polynomial<T>(ctx, pi, n - s, s);
    } catch (const Error&) {
      ok = false;
    }
    rep.kottwitz = ok;
  }
  return rep;
}

template <class T>
ValidationReport validate(const ModelPoint<T>& p, bool kottwitz = false) {
  return validate(*p.frame, p.F, p.G, p.s, p.pi, kottwitz);
}

// (h, l) = (dim tF, dim G cap G^perp'), for points over a field passing (1)-(3).
template <class T>
StratumLabel invariants(const Frame& fr, const Subspace<T>& F, const Subspace<T>& G, int s) {
  static_assert(T::is_field, "invariants need field coefficients");
  const auto ctx = F.context();
  auto rep = validate(fr, F, G, s, T::zero(ctx));
  if (!rep.conditions_1_to_3()) throw Error(ErrorKind::InvalidPoint, "point fails condition " + rep.first_failure());
  int h = F.image(fr.t_matrix<T>(ctx)).dim();
  int l = G.intersect(fr.orthogonal(G, PairingKind::Modified)).dim();
  return {h, l};
}

template <class T>
StratumLabel invariants(const ModelPoint<T>& p) {
  return invariants(*p.frame, p.F, p.G, p.s);
}

// rs - (l-h)(l-h-1)/2.
int stratum_dimension(int r, int s, int h, int l);

// Labels (h, l) with h = l = s mod 2 and 0 <= h <= l <= s.
std::vector<StratumLabel> stratum_labels(int s);

// Columns given in adapted coordinates (top n rows on f, bottom n rows on tf)
// rewritten in the b basis, as a 2n x k matrix.
template <class T>
Matrix<T> adapted_columns(const std::vector<int>& perm, const Matrix<T>& cols) {
  const int n = static_cast<int>(perm.size());
  Matrix<T> out(cols.context(), 2 * n, cols.cols());
  for (int j = 0; j < cols.cols(); ++j)
    for (int a = 0; a < n; ++a) {
      out(perm[a], j) = cols(a, j);
      out(n + perm[a], j) = cols(n + a, j);
    }
  return out;
}

template <class T>
Subspace<T> adapted_span(const std::vector<int>& perm, const Matrix<T>& cols) {
  return Subspace<T>(adapted_columns(perm, cols).transpose());
}

// Generator columns (b basis) of a chart point before canonicalization.
template <class T>
struct ChartColumns {
  Matrix<T> F;
  Matrix<T> G;
};

namespace detail {

template <class T>
bool is_skew(const Matrix<T>& m) {
  if (!m.is_square()) return false;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!(m(i, j) == -m(j, i))) return false;
  return true;
}

template <class T>
void require_size(const Matrix<T>& m, int r, int c, const char* name) {
  if (m.rows() != r || m.cols() != c)
    throw Error(ErrorKind::BadParameters, std::string(name) + " must be " + std::to_string(r) + "x" + std::to_string(c));
}

}  // namespace detail

// Chart through the worst stratum. Even s: X and W are s x s with W skew and
// (X - X^t) W = 0. Odd s: X0 and W0 are (s-1) x (s-1) with the same
// relations, embedded as X = diag(0, X0) and W = [0; W0].
template <class T>
ModelPoint<T> chart_point_eps(const Frame& fr, int s, const Matrix<T>& X0, const Matrix<T>& W0) {
  const int n = fr.n(), r = n - s;
  if (s < 1 || s > r || (r - s) % 2 != 0) throw Error(ErrorKind::BadParameters, "need 1 <= s <= n/2");
  const auto ctx = X0.context();
  const int eps = s % 2, sp = s - eps, p = (r - s) / 2;
  detail::require_size(X0, sp, sp, "X");
  detail::require_size(W0, sp, sp, "W");
  if (!detail::is_skew(W0)) throw Error(ErrorKind::RelationViolated, "W must be skew-symmetric");
  if (!((X0 - X0.transpose()) * W0).is_zero()) throw Error(ErrorKind::RelationViolated, "(X - X^t) W must vanish");
  Matrix<T> X(ctx, s, s);
  X.set_block(eps, eps, X0);
  auto perm = pairing_permutation(normal_form_gram(s, s, s, n, GramCase::EpsStratum).T);
  const T one = T::one(ctx);

  // G: bottom M1 = [I_s; 0; 0; X]
  Matrix<T> g(ctx, 2 * n, s);
  for (int j = 0; j < s; ++j) {
    g(n + j, j) = one;
    for (int i = 0; i < s; ++i) g(n + s + 2 * p + i, j) = X(i, j);
  }
  // F: first r columns bottom M3, then the W columns
  Matrix<T> f(ctx, 2 * n, n);
  for (int j = 0; j < s; ++j) {
    f(n + j, j) = one;
    for (int i = 0; i < s; ++i) f(n + s + 2 * p + i, j) = X(i, j);
  }
  for (int j = 0; j < 2 * p; ++j) f(n + s + j, s + j) = one;
  int col = r;
  if (eps) {
    f(0, col) = one;  // f_1
    ++col;
  }
  Matrix<T> XW = X.block(0, eps, s, sp) * W0;
  for (int j = 0; j < sp; ++j, ++col) {
    for (int i = 0; i < sp; ++i) f(eps + i, col) = W0(i, j);
    for (int i = 0; i < s; ++i) f(s + 2 * p + i, col) = XW(i, j);
    f(n + s + 2 * p + eps + j, col) = one;
  }
  ModelPoint<T> pt;
  pt.frame = &fr;
  pt.s = s;
  pt.pi = T::zero(ctx);
  pt.G = adapted_span(perm, g);
  pt.F = adapted_span(perm, f);
  pt.ring = "chart";
  return pt;
}

// Predicted (h, l) of the eps chart, computed from W and X over the field.
template <class T>
StratumLabel chart_eps_prediction(int s, const Matrix<T>& X0, const Matrix<T>& W0) {
  const int eps = s % 2;
  int h = eps + rank(W0);
  int l = eps + kernel(Matrix<T>(X0 - X0.transpose())).dim();
  return {h, l};
}

// Chart through a point of X_{h,l} in the general adapted basis. Y2 and Z are
// (l-h) x (l-h) with Z skew and (Y2 - Y2^t) Z = 0.
template <class T>
ChartColumns<T> chart_columns_general(const Frame& fr, int s, int h, int l, const Matrix<T>& Y2, const Matrix<T>& Z) {
  const int n = fr.n(), r = n - s, d = l - h;
  if (s < 1 || s > r) throw Error(ErrorKind::BadParameters, "need 1 <= s <= n/2");
  if (h < 0 || h > l || l > s) throw Error(ErrorKind::BadParameters, "need 0 <= h <= l <= s");
  if ((h - s) % 2 != 0 || (l - s) % 2 != 0) throw Error(ErrorKind::ParityViolated, "need h = l = s mod 2");
  detail::require_size(Y2, d, d, "Y2");
  detail::require_size(Z, d, d, "Z");
  if (!detail::is_skew(Z)) throw Error(ErrorKind::RelationViolated, "Z must be skew-symmetric");
  if (!((Y2 - Y2.transpose()) * Z).is_zero()) throw Error(ErrorKind::RelationViolated, "(Y2 - Y2^t) Z must vanish");
  const auto ctx = Y2.context();
  const T one = T::one(ctx);
  auto perm = pairing_permutation(normal_form_gram(h, l, s, n, GramCase::General).T);
  const int b5 = n - l;  // start of block 5 (0-based tf index)

  Matrix<T> g(ctx, 2 * n, s);
  for (int j = 0; j < s; ++j) {
    g(n + j, j) = one;
    if (j >= h && j < l)
      for (int i = 0; i < d; ++i) g(n + b5 + i, j) = Y2(i, j - h);
  }
  Matrix<T> f(ctx, 2 * n, n);
  int col = 0;
  for (int j = 0; j < n - l; ++j, ++col) {
    f(n + j, col) = one;
    if (j >= h && j < l)
      for (int i = 0; i < d; ++i) f(n + b5 + i, col) = Y2(i, j - h);
  }
  for (int j = 0; j < h; ++j, ++col) f(j, col) = one;
  Matrix<T> YZ = Y2 * Z;
  for (int j = 0; j < d; ++j, ++col) {
    for (int i = 0; i < d; ++i) {
      f(h + i, col) = Z(i, j);
      f(b5 + i, col) = YZ(i, j);
    }
    f(n + b5 + j, col) = one;
  }
  return {adapted_columns(perm, f), adapted_columns(perm, g)};
}

template <class T>
ModelPoint<T> chart_point_general(const Frame& fr, int s, int h, int l, const Matrix<T>& Y2, const Matrix<T>& Z) {
  auto cols = chart_columns_general(fr, s, h, l, Y2, Z);
  ModelPoint<T> pt;
  pt.frame = &fr;
  pt.s = s;
  pt.pi = T::zero(Y2.context());
  pt.G = Subspace<T>(cols.G.transpose());
  pt.F = Subspace<T>(cols.F.transpose());
  pt.ring = "chart";
  return pt;
}

template <class T>
StratumLabel chart_general_prediction(int h, const Matrix<T>& Y2, const Matrix<T>& Z) {
  return {h + rank(Z), h + kernel(Matrix<T>(Y2 - Y2.transpose())).dim()};
}

// Local chart at the worst point over a ring with uniformizer value pi:
// G = [pi M; M] with M = [I_s; X; Y; Z], and F spanned by G, the columns
// [-pi N; N] with N = [0 0; I 0; 0 I; Y^t -X^t], and [M B - pi N1; N1] with
// N1 = [0; 0; 0; A]. Requires A^t B + B^t A = 0 and Q B = 2 pi A where
// Q = Z - Z^t + X^t Y - Y^t X.
template <class T>
ModelPoint<T> chart_point_local(const Frame& fr, int s, const Matrix<T>& X, const Matrix<T>& Y, const Matrix<T>& Z,
                                const Matrix<T>& A, const Matrix<T>& B, const T& pi) {
  const int n = fr.n(), r = n - s;
  if (s < 1 || s > r || (r - s) % 2 != 0) throw Error(ErrorKind::BadParameters, "need 1 <= s <= n/2");
  const int p = (r - s) / 2;
  detail::require_size(X, p, s, "X");
  detail::require_size(Y, p, s, "Y");
  detail::require_size(Z, s, s, "Z");
  detail::require_size(A, s, s, "A");
  detail::require_size(B, s, s, "B");
  const auto ctx = X.context();
  const T one = T::one(ctx), two = T::from_int(ctx, 2);
  if (!(A.transpose() * B + B.transpose() * A).is_zero())
    throw Error(ErrorKind::RelationViolated, "A^t B + B^t A must vanish");
  Matrix<T> Q = Z - Z.transpose() + X.transpose() * Y - Y.transpose() * X;
  if (!(Q * B == (two * pi) * A)) throw Error(ErrorKind::RelationViolated, "Q B must equal 2 pi A");
  auto perm = pairing_permutation(normal_form_gram(s, s, s, n, GramCase::EpsStratum).T);

  Matrix<T> M = Matrix<T>::vstack({Matrix<T>::identity(ctx, s), X, Y, Z});
  Matrix<T> N(ctx, n, 2 * p);
  for (int i = 0; i < p; ++i) {
    N(s + i, i) = one;
    N(s + p + i, p + i) = one;
  }
  Matrix<T> yt = Y.transpose(), xt = X.transpose();
  N.set_block(s + 2 * p, 0, yt);
  N.set_block(s + 2 * p, p, -xt);
  Matrix<T> N1(ctx, n, s);
  N1.set_block(s + 2 * p, 0, A);

  Matrix<T> gcols = Matrix<T>::vstack({pi * M, M});
  Matrix<T> ncols = Matrix<T>::vstack({-(pi * N), N});
  Matrix<T> bcols = Matrix<T>::vstack({M * B - pi * N1, N1});
  ModelPoint<T> pt;
  pt.frame = &fr;
  pt.s = s;
  pt.pi = pi;
  pt.G = adapted_span(perm, gcols);
  pt.F = adapted_span(perm, Matrix<T>::hstack({gcols, ncols, bcols}));
  pt.ring = "local";
  return pt;
}

// Dimension of first-order deformations of (F, G) inside the closed subfunctor
// cut out by conditions (1)-(3), at a point over F_q.
int tangent_report(const Frame& fr, const Subspace<Fq>& F, const Subspace<Fq>& G, int s);

}  // namespace splitmod
