#include "splitmod/frame.hpp"

namespace splitmod {

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols != o.rows) throw Error(ErrorKind::BadDimension, "integer matrix product size mismatch");
  IntMatrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k)
      if (int x = (*this)(i, k))
        for (int j = 0; j < o.cols; ++j) r(i, j) += x * o(k, j);
  return r;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r = *this;
  for (auto& x : r.a) x = -x;
  return r;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix r(n, n);
  for (int i = 0; i < n; ++i) r(i, i) = 1;
  return r;
}

IntMatrix IntMatrix::antidiagonal(int n) {
  IntMatrix r(n, n);
  for (int i = 0; i < n; ++i) r(i, n - 1 - i) = 1;
  return r;
}

void IntMatrix::set_block(int r0, int c0, const IntMatrix& b) {
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

std::vector<std::vector<int>> IntMatrix::nested() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out[i].push_back((*this)(i, j));
  return out;
}

Frame::Frame(int n) : n_(n) {
  if (n < 4 || n % 2 != 0) throw Error(ErrorKind::BadDimension, "n must be even and at least 4, got " + std::to_string(n));
  const int mm = n / 2;
  IntMatrix h = IntMatrix::antidiagonal(mm);
  j_ = IntMatrix(n, n);
  j_.set_block(0, mm, -h);
  j_.set_block(mm, 0, h);
  sym_ = IntMatrix(2 * n, 2 * n);
  sym_.set_block(0, n, j_);
  sym_.set_block(n, 0, -j_);
  mod_ = -j_;
  t_ = IntMatrix(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) t_(n + i, i) = 1;
}

std::vector<std::string> Frame::basis_labels() const {
  std::vector<std::string> out;
  const int mm = m();
  for (int i = 1; i <= n_; ++i) out.push_back(i <= mm ? "pi^-1 e" + std::to_string(i) : "e" + std::to_string(i));
  for (int i = 1; i <= n_; ++i) out.push_back(i <= mm ? "e" + std::to_string(i) : "pi e" + std::to_string(i));
  return out;
}

const char* to_string(GramCase c) {
  switch (c) {
    case GramCase::EpsStratum: return "eps-stratum";
    case GramCase::General: return "general";
    case GramCase::SchubertSelfdual: return "schubert-selfdual";
    case GramCase::SchubertPimodular: return "schubert-pimodular";
  }
  return "?";
}

namespace {

// [[0, I_k], [-I_k, 0]] scaled by sign (sign = -1 gives [[0,-I],[I,0]]).
IntMatrix skew_block(int size, int sign) {
  IntMatrix a(size, size);
  const int k = size / 2;
  for (int i = 0; i < k; ++i) {
    a(i, k + i) = sign;
    a(k + i, i) = -sign;
  }
  return a;
}

}  // namespace

NormalFormGram normal_form_gram(int h, int l, int s, int n, GramCase kind) {
  NormalFormGram g{h, l, s, n, kind, IntMatrix(n, n)};
  const bool pimodular = kind != GramCase::SchubertSelfdual;
  if (n < 1 || h < 0 || h > l || l > s || s > n - s)
    throw Error(ErrorKind::BadParameters, "need 0 <= h <= l <= s <= n - s");
  if (pimodular && (n % 2 != 0 || (l - s) % 2 != 0))
    throw Error(ErrorKind::BadParameters, "pi-modular cases need even n and l = s mod 2");
  const int r = n - s;
  IntMatrix& T = g.T;
  if (kind == GramCase::EpsStratum) {
    const int p = (r - s) / 2;
    if ((r - s) % 2 != 0) throw Error(ErrorKind::BadParameters, "r - s must be even");
    // blocks s, p, p, s
    for (int i = 0; i < s; ++i) {
      T(i, s + 2 * p + i) = 1;
      T(s + 2 * p + i, i) = -1;
    }
    for (int i = 0; i < p; ++i) {
      T(s + i, s + p + i) = 1;
      T(s + p + i, s + i) = -1;
    }
    return g;
  }
  // six blocks h, l-h, s-l, r-l, l-h, h
  const int o2 = h, o3 = l, o4 = s, o5 = s + r - l, o6 = o5 + (l - h);
  auto put_identity = [&](int r0, int c0, int size, int v) {
    for (int i = 0; i < size; ++i) T(r0 + i, c0 + i) = v;
  };
  switch (kind) {
    case GramCase::General:
      put_identity(0, o6, h, 1);
      put_identity(o6, 0, h, -1);
      put_identity(o2, o5, l - h, 1);
      put_identity(o5, o2, l - h, -1);
      T.set_block(o3, o3, skew_block(s - l, 1));
      T.set_block(o4, o4, skew_block(r - l, 1));
      break;
    case GramCase::SchubertSelfdual:
      put_identity(0, o6, h, 1);
      put_identity(o6, 0, h, 1);
      put_identity(o2, o5, l - h, 1);
      put_identity(o5, o2, l - h, 1);
      put_identity(o3, o3, s - l, 1);
      put_identity(o4, o4, r - l, 1);
      break;
    case GramCase::SchubertPimodular:
      put_identity(0, o6, h, -1);
      put_identity(o6, 0, h, 1);
      put_identity(o2, o5, l - h, -1);
      put_identity(o5, o2, l - h, 1);
      T.set_block(o3, o3, skew_block(s - l, -1));
      T.set_block(o4, o4, skew_block(r - l, -1));
      break;
    case GramCase::EpsStratum:
      break;
  }
  return g;
}

std::vector<int> pairing_permutation(const IntMatrix& T) {
  const int n = T.rows;
  if (T.cols != n || n % 2 != 0) throw Error(ErrorKind::BadParameters, "pairing matrix must be square of even size");
  if (!(T.transpose() == -T)) throw Error(ErrorKind::BadParameters, "pairing matrix is not skew");
  std::vector<int> p(static_cast<std::size_t>(n), -1);
  int k = 0;
  for (int a = 0; a < n; ++a) {
    if (p[a] >= 0) continue;
    int partner = -1;
    for (int b = 0; b < n; ++b) {
      if (T(a, b) == 0) continue;
      if (partner >= 0 || (T(a, b) != 1 && T(a, b) != -1)) throw Error(ErrorKind::BadParameters, "pairing matrix is not a matching");
      partner = b;
    }
    if (partner < 0 || p[partner] >= 0) throw Error(ErrorKind::BadParameters, "pairing matrix is degenerate");
    if (T(a, partner) == 1) {
      p[a] = k;
      p[partner] = n - 1 - k;
    } else {
      p[partner] = k;
      p[a] = n - 1 - k;
    }
    ++k;
  }
  IntMatrix P = permutation_matrix(p);
  IntMatrix mJ = IntMatrix::antidiagonal(n / 2);
  IntMatrix negJ(n, n);
  negJ.set_block(0, n / 2, mJ);
  negJ.set_block(n / 2, 0, -mJ);
  if (!(P.transpose() * negJ * P == T)) throw Error(ErrorKind::BadParameters, "pairing permutation check failed");
  return p;
}

IntMatrix permutation_matrix(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  IntMatrix m(n, n);
  for (int a = 0; a < n; ++a) m(p[a], a) = 1;
  return m;
}

}  // namespace splitmod
