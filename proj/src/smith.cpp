#include "splitmod/smith.hpp"

#include <algorithm>

namespace splitmod {

RMatrix smith_diagonal(RatContext ctx, const std::vector<int>& type) {
  const int n = static_cast<int>(type.size());
  RMatrix d(ctx, n, n);
  for (int i = 0; i < n; ++i) d(i, i) = RationalFunction::monomial(ctx, Fq::one(ctx.field), type[i]);
  return d;
}

bool is_local_unit_matrix(const RMatrix& m) {
  if (!m.is_square()) return false;
  for (const auto& x : m.data())
    if (x.valuation() < 0) return false;
  return determinant(m).valuation() == 0;
}

SmithForm smith_form_local(const RMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::BadDimension, "smith_form_local needs a square matrix");
  const int n = m.rows();
  const auto ctx = m.context();
  SmithForm out;
  out.U = RMatrix::identity(ctx, n);
  out.V = RMatrix::identity(ctx, n);
  if (n == 0) return out;

  int vmin = kInfiniteValuation;
  for (const auto& x : m.data()) vmin = std::min(vmin, x.valuation());
  if (vmin == kInfiniteValuation) throw Error(ErrorKind::Singular, "zero matrix");
  out.shift = vmin;
  RMatrix a = m;
  if (vmin != 0)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = a(i, j).shifted(-vmin);
  for (const auto& x : a.data())
    if (x.valuation() < 0) throw Error(ErrorKind::NotLocalizable, "entry not u-integral after scaling");

  RMatrix& U = out.U;
  RMatrix& V = out.V;
  for (int k = 0; k < n; ++k) {
    int pi = -1, pj = -1, best = kInfiniteValuation;
    for (int i = k; i < n; ++i)
      for (int j = k; j < n; ++j) {
        int v = a(i, j).valuation();
        if (v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) throw Error(ErrorKind::Singular, "matrix is singular");
    if (pi != k)
      for (int j = 0; j < n; ++j) {
        std::swap(a(pi, j), a(k, j));
        std::swap(U(pi, j), U(k, j));
      }
    if (pj != k)
      for (int i = 0; i < n; ++i) {
        std::swap(a(i, pj), a(i, k));
        std::swap(V(i, pj), V(i, k));
      }
    // normalize the pivot to u^best with a unit row scaling
    RationalFunction target = RationalFunction::monomial(ctx, Fq::one(ctx.field), best);
    RationalFunction scale = target / a(k, k);
    if (!scale.is_one()) {
      for (int j = 0; j < n; ++j) {
        a(k, j) = scale * a(k, j);
        U(k, j) = scale * U(k, j);
      }
    }
    const RationalFunction piv = a(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      RationalFunction f = a(i, k) / piv;
      for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      for (int j = 0; j < n; ++j) U(i, j) -= f * U(k, j);
    }
    for (int j = k + 1; j < n; ++j) {
      if (a(k, j).is_zero()) continue;
      RationalFunction f = a(k, j) / piv;
      a(k, j) = RationalFunction::zero(ctx);
      for (int i = 0; i < n; ++i) V(i, j) -= f * V(i, k);
    }
    out.type.push_back(best + vmin);
  }
  return out;
}

}  // namespace splitmod
