#pragma once

#include <string>
#include <vector>

#include "splitmod/linalg.hpp"

namespace splitmod {

// Small integer matrix, converted into any ring on demand.
struct IntMatrix {
  int rows{0};
  int cols{0};
  std::vector<int> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r * c), 0) {}
  int& operator()(int i, int j) { return a[static_cast<std::size_t>(i * cols + j)]; }
  int operator()(int i, int j) const { return a[static_cast<std::size_t>(i * cols + j)]; }
  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator-() const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  static IntMatrix identity(int n);
  // antidiagonal unit matrix H_n
  static IntMatrix antidiagonal(int n);
  void set_block(int r0, int c0, const IntMatrix& b);

  template <class T>
  Matrix<T> to(typename T::Context ctx) const {
    Matrix<T> m(ctx, rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if ((*this)(i, j)) m(i, j) = T::from_int(ctx, (*this)(i, j));
    return m;
  }
  std::vector<std::vector<int>> nested() const;
};

enum class PairingKind { Symmetric, Modified };

// Model of Lambda_m (x) k. Basis b_1..b_2n is
//   pi^-1 e_1..pi^-1 e_m, e_{m+1}..e_n, e_1..e_m, pi e_{m+1}..pi e_n
// and vectors are coordinate columns in this basis. t sends b_i to b_{n+i}
// and b_{n+i} to pi^2 b_i, so it kills the last n vectors in the special fiber.
class Frame {
 public:
  explicit Frame(int n);

  int n() const noexcept { return n_; }
  int m() const noexcept { return n_ / 2; }
  int dim() const noexcept { return 2 * n_; }

  // J_n = [[0, -H_m], [H_m, 0]].
  const IntMatrix& J() const noexcept { return j_; }
  // [[0, J], [-J, 0]]; the same matrix for every value of pi.
  const IntMatrix& gram_sym() const noexcept { return sym_; }
  // -J_n on the coordinates of t Lambda (the last n).
  const IntMatrix& gram_mod() const noexcept { return mod_; }
  // t with pi = 0.
  const IntMatrix& t_special() const noexcept { return t_; }

  template <class T>
  Matrix<T> t_matrix(typename T::Context ctx, const T& pi) const {
    Matrix<T> m = t_.to<T>(ctx);
    T pi2 = pi * pi;
    for (int i = 0; i < n_; ++i) m(i, n_ + i) = pi2;
    return m;
  }
  template <class T>
  Matrix<T> t_matrix(typename T::Context ctx) const {
    return t_.to<T>(ctx);
  }
  // t + c, used for the operators (t + pi) and (t - pi).
  template <class T>
  Matrix<T> t_shift(typename T::Context ctx, const T& pi, const T& c) const {
    Matrix<T> m = t_matrix<T>(ctx, pi);
    for (int i = 0; i < dim(); ++i) m(i, i) += c;
    return m;
  }

  // Standard basis vector b_i, 1-based as in the labels.
  template <class T>
  std::vector<T> b(typename T::Context ctx, int i) const {
    std::vector<T> v(static_cast<std::size_t>(dim()), T::zero(ctx));
    v.at(static_cast<std::size_t>(i - 1)) = T::one(ctx);
    return v;
  }
  template <class T>
  Subspace<T> span_b(typename T::Context ctx, const std::vector<int>& labels) const {
    std::vector<int> idx;
    for (int l : labels) idx.push_back(l - 1);
    return Subspace<T>::coordinate(ctx, dim(), idx);
  }
  template <class T>
  Subspace<T> t_lambda(typename T::Context ctx) const {
    std::vector<int> idx;
    for (int i = n_; i < 2 * n_; ++i) idx.push_back(i);
    return Subspace<T>::coordinate(ctx, dim(), idx);
  }
  template <class T>
  bool in_t_lambda(const std::vector<T>& v) const {
    for (int i = 0; i < n_; ++i)
      if (!v[static_cast<std::size_t>(i)].is_zero()) return false;
    return true;
  }

  template <class T>
  T pair(const std::vector<T>& x, const std::vector<T>& y, PairingKind kind) const {
    if (static_cast<int>(x.size()) != dim() || static_cast<int>(y.size()) != dim())
      throw Error(ErrorKind::AmbientMismatch, "vector length differs from 2n");
    const auto ctx = x.front().context();
    T acc = T::zero(ctx);
    if (kind == PairingKind::Symmetric) {
      for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
          if (int g = sym_(i, j)) acc += T::from_int(ctx, g) * x[i] * y[j];
      return acc;
    }
    if (!in_t_lambda(x) || !in_t_lambda(y)) throw Error(ErrorKind::NotInTLambda, "modified pairing needs vectors in t Lambda");
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (int g = mod_(i, j)) acc += T::from_int(ctx, g) * x[n_ + i] * y[n_ + j];
    return acc;
  }

  // Orthogonal complement. Symmetric kind: in the full 2n-space. Modified
  // kind: inside t Lambda, for U inside t Lambda.
  template <class T>
  Subspace<T> orthogonal(const Subspace<T>& u, PairingKind kind) const {
    const auto ctx = u.context();
    if (u.ambient() != dim()) throw Error(ErrorKind::AmbientMismatch, "subspace not in the frame");
    if (kind == PairingKind::Symmetric) return Subspace<T>::kernel_of(u.basis() * sym_.to<T>(ctx));
    for (int i = 0; i < u.dim(); ++i)
      if (!in_t_lambda(u.basis().row_vec(i))) throw Error(ErrorKind::NotInTLambda, "subspace not inside t Lambda");
    // {y : y_top = 0 and U_low (-J) y_low = 0}
    Matrix<T> eqs(ctx, u.dim() + n_, dim());
    Matrix<T> low = u.basis().block(0, n_, u.dim(), n_) * mod_.to<T>(ctx);
    eqs.set_block(0, n_, low);
    for (int i = 0; i < n_; ++i) eqs(u.dim() + i, i) = T::one(ctx);
    return Subspace<T>::kernel_of(eqs);
  }

  std::vector<std::string> basis_labels() const;

 private:
  int n_;
  IntMatrix j_, sym_, mod_, t_;
};

enum class GramCase { EpsStratum, General, SchubertSelfdual, SchubertPimodular };
const char* to_string(GramCase c);

struct NormalFormGram {
  int h{0}, l{0}, s{0}, n{0};
  GramCase kind{GramCase::General};
  IntMatrix T;
};

// Block matrices of the modified pairing in adapted bases.
NormalFormGram normal_form_gram(int h, int l, int s, int n, GramCase kind);

// For a skew matrix T whose nonzero entries form a perfect matching of +-1
// pairs, the permutation P (index of T -> 0-based frame index in t Lambda)
// with P^t (-J) P = T. Throws BadParameters otherwise.
std::vector<int> pairing_permutation(const IntMatrix& T);

// Convenience: the permutation as a matrix, column a has its 1 in row P[a].
IntMatrix permutation_matrix(const std::vector<int>& p);

}  // namespace splitmod
