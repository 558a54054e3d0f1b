#pragma once

#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "splitmod/errors.hpp"

namespace splitmod {

// Dense row-major matrix over a ring type T. The ring context is stored so
// that empty matrices still know their ring.
template <class T>
class Matrix {
 public:
  using Context = typename T::Context;
  using value_type = T;

  Matrix() = default;
  Matrix(Context ctx, int rows, int cols) : ctx_(ctx), r_(rows), c_(cols), a_(static_cast<std::size_t>(rows * cols), T::zero(ctx)) {
    if (rows < 0 || cols < 0) throw Error(ErrorKind::BadDimension, "negative matrix size");
  }
  Matrix(Context ctx, int rows, int cols, std::vector<T> data) : ctx_(ctx), r_(rows), c_(cols), a_(std::move(data)) {
    if (static_cast<int>(a_.size()) != rows * cols) throw Error(ErrorKind::BadDimension, "matrix data size mismatch");
  }

  static Matrix identity(Context ctx, int n) {
    Matrix m(ctx, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T::one(ctx);
    return m;
  }
  static Matrix from_ints(Context ctx, std::initializer_list<std::initializer_list<long long>> rows) {
    int nr = static_cast<int>(rows.size());
    int nc = nr ? static_cast<int>(rows.begin()->size()) : 0;
    Matrix m(ctx, nr, nc);
    int i = 0;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != nc) throw Error(ErrorKind::BadDimension, "ragged matrix literal");
      int j = 0;
      for (long long v : row) m(i, j++) = T::from_int(ctx, v);
      ++i;
    }
    return m;
  }
  static Matrix from_ints(Context ctx, const std::vector<std::vector<long long>>& rows, int cols = -1) {
    int nr = static_cast<int>(rows.size());
    int nc = cols >= 0 ? cols : (nr ? static_cast<int>(rows[0].size()) : 0);
    Matrix m(ctx, nr, nc);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) m(i, j) = T::from_int(ctx, rows[i][j]);
    return m;
  }
  static Matrix column(Context ctx, const std::vector<T>& v) {
    return Matrix(ctx, static_cast<int>(v.size()), 1, v);
  }

  Context context() const { return ctx_; }
  int rows() const noexcept { return r_; }
  int cols() const noexcept { return c_; }
  bool empty() const noexcept { return r_ == 0 || c_ == 0; }

  T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * c_ + j)]; }
  const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * c_ + j)]; }
  const std::vector<T>& data() const noexcept { return a_; }

  std::vector<T> row_vec(int i) const { return {a_.begin() + i * c_, a_.begin() + (i + 1) * c_}; }
  std::vector<T> col_vec(int j) const {
    std::vector<T> v;
    v.reserve(static_cast<std::size_t>(r_));
    for (int i = 0; i < r_; ++i) v.push_back((*this)(i, j));
    return v;
  }
  Matrix row(int i) const { return block(i, 0, 1, c_); }
  Matrix col(int j) const { return block(0, j, r_, 1); }

  Matrix transpose() const {
    Matrix t(ctx_, c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix block(int r0, int c0, int nr, int nc) const {
    if (r0 < 0 || c0 < 0 || r0 + nr > r_ || c0 + nc > c_) throw Error(ErrorKind::BadDimension, "block out of range");
    Matrix b(ctx_, nr, nc);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }
  void set_block(int r0, int c0, const Matrix& b) {
    if (r0 < 0 || c0 < 0 || r0 + b.r_ > r_ || c0 + b.c_ > c_) throw Error(ErrorKind::BadDimension, "block out of range");
    for (int i = 0; i < b.r_; ++i)
      for (int j = 0; j < b.c_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }
  Matrix select_cols(const std::vector<int>& idx) const {
    Matrix m(ctx_, r_, static_cast<int>(idx.size()));
    for (int i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) m(i, static_cast<int>(j)) = (*this)(i, idx[j]);
    return m;
  }
  Matrix select_rows(const std::vector<int>& idx) const {
    Matrix m(ctx_, static_cast<int>(idx.size()), c_);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (int j = 0; j < c_; ++j) m(static_cast<int>(i), j) = (*this)(idx[i], j);
    return m;
  }

  static Matrix hstack(const std::vector<Matrix>& parts) {
    if (parts.empty()) throw Error(ErrorKind::BadDimension, "hstack of nothing");
    int nr = parts[0].r_, nc = 0;
    for (const auto& p : parts) {
      if (p.r_ != nr) throw Error(ErrorKind::BadDimension, "hstack row mismatch");
      nc += p.c_;
    }
    Matrix m(parts[0].ctx_, nr, nc);
    int c0 = 0;
    for (const auto& p : parts) {
      m.set_block(0, c0, p);
      c0 += p.c_;
    }
    return m;
  }
  static Matrix vstack(const std::vector<Matrix>& parts) {
    if (parts.empty()) throw Error(ErrorKind::BadDimension, "vstack of nothing");
    int nc = parts[0].c_, nr = 0;
    for (const auto& p : parts) {
      if (p.c_ != nc) throw Error(ErrorKind::BadDimension, "vstack column mismatch");
      nr += p.r_;
    }
    Matrix m(parts[0].ctx_, nr, nc);
    int r0 = 0;
    for (const auto& p : parts) {
      m.set_block(r0, 0, p);
      r0 += p.r_;
    }
    return m;
  }
  // Block matrix from a grid of blocks; each block row shares a height.
  static Matrix blocks(const std::vector<std::vector<Matrix>>& grid) {
    std::vector<Matrix> rows;
    for (const auto& r : grid) rows.push_back(hstack(r));
    return vstack(rows);
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same(b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_same(b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
    return r;
  }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw Error(ErrorKind::BadDimension, "product size mismatch");
    Matrix r(a.ctx_, a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
      for (int k = 0; k < a.c_; ++k) {
        const T& x = a(i, k);
        if (x.is_zero()) continue;
        for (int j = 0; j < b.c_; ++j) r(i, j) += x * b(k, j);
      }
    return r;
  }
  friend Matrix operator*(const T& s, const Matrix& m) {
    Matrix r = m;
    for (auto& x : r.a_) x = s * x;
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_square() const noexcept { return r_ == c_; }

  template <class F>
  auto map(F fn) const -> Matrix<decltype(fn(std::declval<const T&>()))> {
    using U = decltype(fn(std::declval<const T&>()));
    std::vector<U> out;
    out.reserve(a_.size());
    for (const auto& x : a_) out.push_back(fn(x));
    typename U::Context uctx = a_.empty() ? typename U::Context{} : out[0].context();
    return Matrix<U>(uctx, r_, c_, std::move(out));
  }
  // map with an explicit target context (needed for empty matrices)
  template <class U, class F>
  Matrix<U> map_to(typename U::Context uctx, F fn) const {
    std::vector<U> out;
    out.reserve(a_.size());
    for (const auto& x : a_) out.push_back(fn(x));
    return Matrix<U>(uctx, r_, c_, std::move(out));
  }

  std::vector<std::vector<std::string>> to_strings() const {
    std::vector<std::vector<std::string>> out(static_cast<std::size_t>(r_));
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) out[i].push_back((*this)(i, j).to_string());
    return out;
  }
  std::string to_string() const {
    std::string s = "[";
    for (int i = 0; i < r_; ++i) {
      s += i ? "; " : "";
      for (int j = 0; j < c_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
    }
    return s + "]";
  }

 private:
  void check_same(const Matrix& b) const {
    if (r_ != b.r_ || c_ != b.c_) throw Error(ErrorKind::BadDimension, "matrix size mismatch");
  }

  Context ctx_{};
  int r_{0};
  int c_{0};
  std::vector<T> a_;
};

}  // namespace splitmod
