#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "splitmod/matrix.hpp"

namespace splitmod {

template <class T>
struct Echelon {
  Matrix<T> m;              // reduced rows; rows past rank are leftovers
  int rank{0};
  std::vector<int> pivots;  // pivot column per row
  bool clean{true};         // no nonzero leftover rows
};

// Row reduction with unit pivots only. Over a field this is RREF. Over a local
// ring it yields the canonical basis of a free direct summand (identity in
// the pivot columns); leftovers mean the row span is not a direct summand.
template <class T>
Echelon<T> echelon(Matrix<T> m) {
  Echelon<T> out;
  const int nr = m.rows(), nc = m.cols();
  int r = 0;
  for (int col = 0; col < nc && r < nr; ++col) {
    int piv = -1;
    for (int i = r; i < nr; ++i)
      if (m(i, col).is_unit()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < nc; ++j) std::swap(m(piv, j), m(r, j));
    T inv = m(r, col).inverse();
    for (int j = col; j < nc; ++j) m(r, j) = inv * m(r, j);
    for (int i = 0; i < nr; ++i) {
      if (i == r || m(i, col).is_zero()) continue;
      T f = m(i, col);
      for (int j = col; j < nc; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(col);
    ++r;
  }
  out.rank = r;
  for (int i = r; i < nr && out.clean; ++i)
    for (int j = 0; j < nc; ++j)
      if (!m(i, j).is_zero()) {
        out.clean = false;
        break;
      }
  out.m = std::move(m);
  return out;
}

template <class T>
struct RrefResult {
  Matrix<T> m;
  int rank{0};
  std::vector<int> pivots;
};

template <class T>
RrefResult<T> rref(const Matrix<T>& m) {
  if constexpr (!T::is_field) {
    throw Error(ErrorKind::NotAField, "rref requires field coefficients");
  } else {
    auto e = echelon(m);
    return {std::move(e.m), e.rank, std::move(e.pivots)};
  }
}

template <class T>
int rank(const Matrix<T>& m) {
  return rref(m).rank;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.is_square()) throw Error(ErrorKind::BadDimension, "inverse of a non-square matrix");
  const int n = m.rows();
  auto aug = Matrix<T>::hstack({m, Matrix<T>::identity(m.context(), n)});
  auto e = echelon(aug);
  if (e.rank < n || (n > 0 && e.pivots[static_cast<std::size_t>(n - 1)] != n - 1))
    throw Error(ErrorKind::Singular, "matrix is not invertible");
  return e.m.block(0, n, n, n);
}

// Characteristic polynomial coefficients by the division-free Berkowitz
// recursion: det(x I - A) = sum_k c[k] x^(n-k), c[0] = 1.
template <class T>
std::vector<T> charpoly(const Matrix<T>& a) {
  if (!a.is_square()) throw Error(ErrorKind::BadDimension, "charpoly of a non-square matrix");
  const int n = a.rows();
  const auto ctx = a.context();
  std::vector<T> c{T::one(ctx)};
  if (n == 0) return c;
  c.push_back(-a(0, 0));
  for (int r = 1; r < n; ++r) {
    Matrix<T> lead = a.block(0, 0, r, r);
    Matrix<T> R = a.block(r, 0, 1, r);
    Matrix<T> S = a.block(0, r, r, 1);
    std::vector<T> t{T::one(ctx), -a(r, r)};
    Matrix<T> v = S;
    for (int k = 0; k < r; ++k) {
      t.push_back(-(R * v)(0, 0));
      v = lead * v;
    }
    std::vector<T> next(static_cast<std::size_t>(r + 2), T::zero(ctx));
    for (int i = 0; i < r + 2; ++i)
      for (int j = 0; j <= std::min(i, r); ++j) next[i] += t[i - j] * c[j];
    c = std::move(next);
  }
  return c;
}

template <class T>
T determinant(const Matrix<T>& a) {
  auto c = charpoly(a);
  T d = c.back();
  return a.rows() % 2 ? -d : d;
}

// Row span of a matrix in canonical form: the rows of the basis matrix are in
// reduced echelon form with unit pivots, so equality is structural.
template <class T>
class Subspace {
 public:
  using Context = typename T::Context;

  Subspace() = default;
  // Span of the rows of m. Throws NotDirectSummand over a local ring when
  // the span is not a free direct summand.
  explicit Subspace(const Matrix<T>& rows_span) : d_(rows_span.cols()), ctx_(rows_span.context()) {
    auto e = echelon(rows_span);
    if (!e.clean) throw Error(ErrorKind::NotDirectSummand, "row span is not a direct summand");
    basis_ = e.m.block(0, 0, e.rank, d_);
    pivots_ = std::move(e.pivots);
  }
  static Subspace from_columns(const Matrix<T>& cols) { return Subspace(cols.transpose()); }
  static Subspace zero(Context ctx, int d) { return Subspace(Matrix<T>(ctx, 0, d)); }
  static Subspace full(Context ctx, int d) { return Subspace(Matrix<T>::identity(ctx, d)); }
  // Span of standard basis vectors with the given 0-based indices.
  static Subspace coordinate(Context ctx, int d, const std::vector<int>& idx) {
    Matrix<T> m(ctx, static_cast<int>(idx.size()), d);
    for (std::size_t i = 0; i < idx.size(); ++i) m(static_cast<int>(i), idx[i]) = T::one(ctx);
    return Subspace(m);
  }

  int ambient() const noexcept { return d_; }
  int dim() const noexcept { return basis_.rows(); }
  Context context() const { return ctx_; }
  const Matrix<T>& basis() const noexcept { return basis_; }
  Matrix<T> basis_columns() const { return basis_.transpose(); }
  const std::vector<int>& pivots() const noexcept { return pivots_; }

  // Residual of v after subtracting its pivot-coordinate combination; zero iff v lies in the span.
  std::vector<T> reduce(std::vector<T> v) const {
    check_len(static_cast<int>(v.size()));
    for (int i = 0; i < dim(); ++i) {
      T c = v[static_cast<std::size_t>(pivots_[i])];
      if (c.is_zero()) continue;
      for (int j = 0; j < d_; ++j)
        if (!basis_(i, j).is_zero()) v[j] -= c * basis_(i, j);
    }
    return v;
  }
  bool contains(const std::vector<T>& v) const {
    for (const auto& x : reduce(v))
      if (!x.is_zero()) return false;
    return true;
  }
  bool contains(const Subspace& u) const {
    check_same(u);
    for (int i = 0; i < u.dim(); ++i)
      if (!contains(u.basis_.row_vec(i))) return false;
    return true;
  }
  // Every column of m lies in the span.
  bool contains_columns(const Matrix<T>& m) const {
    for (int j = 0; j < m.cols(); ++j)
      if (!contains(m.col_vec(j))) return false;
    return true;
  }
  friend bool operator==(const Subspace& a, const Subspace& b) { return a.d_ == b.d_ && a.basis_ == b.basis_; }

  Subspace sum(const Subspace& u) const {
    check_same(u);
    return Subspace(Matrix<T>::vstack({basis_, u.basis_}));
  }
  // Linear forms vanishing on the span, as a subspace of the dual (dot pairing).
  Subspace annihilator() const { return kernel_of(basis_); }
  Subspace intersect(const Subspace& u) const {
    check_same(u);
    return annihilator().sum(u.annihilator()).annihilator();
  }
  // Image under x -> A x.
  Subspace image(const Matrix<T>& a) const {
    if (a.cols() != d_) throw Error(ErrorKind::AmbientMismatch, "map source dimension mismatch");
    return Subspace((a * basis_columns()).transpose());
  }
  // {x : A x in this}.
  Subspace preimage(const Matrix<T>& a) const {
    if (a.rows() != d_) throw Error(ErrorKind::AmbientMismatch, "map target dimension mismatch");
    return kernel_of(annihilator().basis_ * a);
  }

  // Right null space {x : m x = 0}.
  static Subspace kernel_of(const Matrix<T>& m) {
    if constexpr (!T::is_field) throw Error(ErrorKind::NotAField, "kernel requires field coefficients");
    auto e = rref(m);
    const int nc = m.cols();
    std::vector<bool> is_piv(static_cast<std::size_t>(nc), false);
    for (int p : e.pivots) is_piv[p] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < nc; ++j)
      if (!is_piv[j]) free_cols.push_back(j);
    Matrix<T> k(m.context(), static_cast<int>(free_cols.size()), nc);
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
      int fc = free_cols[f];
      k(static_cast<int>(f), fc) = T::one(m.context());
      for (int i = 0; i < e.rank; ++i) k(static_cast<int>(f), e.pivots[i]) = -e.m(i, fc);
    }
    return Subspace(k);
  }

  std::string to_string() const { return basis_.to_string(); }

 private:
  void check_len(int n) const {
    if (n != d_) throw Error(ErrorKind::AmbientMismatch, "vector length differs from ambient dimension");
  }
  void check_same(const Subspace& u) const {
    if (u.d_ != d_) throw Error(ErrorKind::AmbientMismatch, "subspaces live in different ambient spaces");
  }

  int d_{0};
  Context ctx_{};
  Matrix<T> basis_;
  std::vector<int> pivots_;
};

template <class T>
Subspace<T> kernel(const Matrix<T>& m) {
  return Subspace<T>::kernel_of(m);
}

enum class CombineMode { Sum, Intersect, Contains, Equals };

struct CombineResult {
  bool is_boolean{false};
  bool flag{false};
};

// Dispatcher over the four subspace combinations: Sum and Intersect write
// into out, Contains and Equals return a flag.
template <class T>
CombineResult subspace_combine(const Subspace<T>& u, const Subspace<T>& v, CombineMode mode, Subspace<T>* out = nullptr) {
  if (u.ambient() != v.ambient()) throw Error(ErrorKind::AmbientMismatch, "subspaces live in different ambient spaces");
  switch (mode) {
    case CombineMode::Sum:
      if (out) *out = u.sum(v);
      return {};
    case CombineMode::Intersect:
      if (out) *out = u.intersect(v);
      return {};
    case CombineMode::Contains:
      return {true, u.contains(v)};
    case CombineMode::Equals:
      return {true, u == v};
  }
  return {};
}

}  // namespace splitmod
