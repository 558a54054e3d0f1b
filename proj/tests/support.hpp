#pragma once

// Seeded random generators shared by the unit and acceptance tests.

#include <algorithm>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "splitmod/linalg.hpp"
#include "splitmod/multipoly.hpp"
#include "splitmod/rational_function.hpp"
#include "splitmod/smith.hpp"
#include "splitmod/truncated_series.hpp"

namespace testsupport {

using namespace splitmod;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  Fq fq(const GaloisField* f) { return {f, static_cast<GaloisField::Code>(uniform(0, static_cast<int>(f->order()) - 1))}; }
  Fq fq_nonzero(const GaloisField* f) {
    return {f, static_cast<GaloisField::Code>(uniform(1, static_cast<int>(f->order()) - 1))};
  }
  UPoly upoly(const GaloisField* f, int max_deg) {
    std::vector<GaloisField::Code> c;
    int d = uniform(-1, max_deg);
    for (int i = 0; i <= d; ++i) c.push_back(fq(f).code());
    return UPoly(f, c);
  }
  UPoly upoly_nonzero(const GaloisField* f, int max_deg) {
    for (;;) {
      auto p = upoly(f, max_deg);
      if (!p.is_zero()) return p;
    }
  }
  RationalFunction rat(RatContext ctx, int max_deg = 2) {
    return {ctx, upoly(ctx.field, max_deg), upoly_nonzero(ctx.field, max_deg)};
  }
  // Laurent polynomial with exponents in [lo, hi].
  RationalFunction laurent(RatContext ctx, int lo, int hi) {
    auto r = RationalFunction::zero(ctx);
    for (int k = lo; k <= hi; ++k) r += RationalFunction::monomial(ctx, fq(ctx.field), k);
    return r;
  }
  // u-integral element with nonzero constant term.
  RationalFunction local_unit(RatContext ctx) {
    auto num = upoly(ctx.field, 2) .shifted(1) + UPoly::constant(fq_nonzero(ctx.field));
    auto den = upoly(ctx.field, 1).shifted(1) + UPoly::one(ctx.field);
    return {ctx, num, den};
  }
  RationalFunction local_integral(RatContext ctx) {
    auto num = upoly(ctx.field, 2);
    auto den = upoly(ctx.field, 1).shifted(1) + UPoly::one(ctx.field);
    return {ctx, num, den};
  }
  TruncatedSeries series(SeriesContext ctx) {
    std::vector<GaloisField::Code> c;
    for (int i = 0; i < ctx.precision; ++i) c.push_back(fq(ctx.field).code());
    return TruncatedSeries(ctx, c);
  }
  DualNumber dual(const GaloisField* f) { return {fq(f), fq(f)}; }

  template <class T, class F>
  Matrix<T> matrix(typename T::Context ctx, int r, int c, F&& entry) {
    Matrix<T> m(ctx, r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = entry();
    return m;
  }
  Matrix<Fq> fq_matrix(const GaloisField* f, int r, int c) {
    return matrix<Fq>(f, r, c, [&] { return fq(f); });
  }
  Matrix<Fq> fq_invertible(const GaloisField* f, int n) {
    for (;;) {
      auto m = fq_matrix(f, n, n);
      if (rank(m) == n) return m;
    }
  }
  // Skew-symmetric matrix with zero diagonal.
  Matrix<Fq> fq_skew(const GaloisField* f, int n) {
    Matrix<Fq> m(f, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        m(i, j) = fq(f);
        m(j, i) = -m(i, j);
      }
    return m;
  }

  // (X, W) of size d x d with W skew and (X - X^t) W = 0, covering all ranks:
  // W = P diag(W1, 0) P^t and X - X^t = P^-t diag(0, S2) P^-1.
  std::pair<Matrix<Fq>, Matrix<Fq>> chart_pair(const GaloisField* f, int d) {
    if (d == 0) return {Matrix<Fq>(f, 0, 0), Matrix<Fq>(f, 0, 0)};
    int k = uniform(0, d);
    auto P = fq_invertible(f, d);
    auto Pinv = inverse(P);
    Matrix<Fq> W1(f, d, d), S2(f, d, d);
    W1.set_block(0, 0, fq_skew(f, k));
    S2.set_block(k, k, fq_skew(f, d - k));
    auto W = P * W1 * P.transpose();
    auto S = Pinv.transpose() * S2 * Pinv;
    Matrix<Fq> X(f, d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j <= i; ++j) {
        Fq sym = fq(f);
        X(i, j) += sym;
        if (i != j) {
          X(j, i) += sym;
          X(i, j) += S(i, j);
        }
      }
    return {X, W};
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// lower times upper triangular local units, times a permutation
inline RMatrix random_local_unit(Gen& g, RatContext ctx, int n) {
  RMatrix l = RMatrix::identity(ctx, n), up = RMatrix::identity(ctx, n);
  for (int i = 0; i < n; ++i) {
    l(i, i) = g.local_unit(ctx);
    for (int j = 0; j < i; ++j) l(i, j) = g.local_integral(ctx);
    for (int j = i + 1; j < n; ++j) up(i, j) = g.local_integral(ctx);
  }
  RMatrix p(ctx, n, n);
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), g.engine());
  for (int i = 0; i < n; ++i) p(i, perm[i]) = RationalFunction::one(ctx);
  return l * up * p;
}

// all monomials of total degree d, as polynomials
inline std::vector<MultiPoly> monomials(const std::shared_ptr<const PolyRing>& r, int d, int from = 0) {
  if (d == 0) return {MultiPoly::one(r)};
  std::vector<MultiPoly> out;
  for (int v = from; v < r->nvars(); ++v)
    for (const auto& m : monomials(r, d - 1, v)) out.push_back(MultiPoly::var(r, v) * m);
  return out;
}

// Degree-D slice of a homogeneous ideal contains f: row-reduce the Macaulay
// matrix of all m * g with deg(m g) = D, then append f.
inline bool macaulay_contains(const std::vector<MultiPoly>& gens, const MultiPoly& f, int D) {
  const auto& r = f.context();
  auto mons = monomials(r, D);
  std::vector<MultiPoly> rows;
  for (const auto& g : gens) {
    int k = D - g.total_degree();
    if (k < 0) continue;
    for (const auto& m : monomials(r, k)) rows.push_back(m * g);
  }
  auto col = [&](const Monomial& m) {
    for (std::size_t i = 0; i < mons.size(); ++i)
      if (mons[i].lm() == m) return static_cast<int>(i);
    return -1;
  };
  const auto* F = r->field();
  auto fill = [&](Matrix<Fq>& a, int i, const MultiPoly& p) {
    for (const auto& [m, c] : p.terms()) a(i, col(m)) = Fq(F, c);
  };
  const int n = static_cast<int>(rows.size()), w = static_cast<int>(mons.size());
  Matrix<Fq> a(F, std::max(n, 1), w), b(F, n + 1, w);
  for (int i = 0; i < n; ++i) {
    fill(a, i, rows[i]);
    fill(b, i, rows[i]);
  }
  fill(b, n, f);
  return rank(a) == rank(b);
}

inline MultiPoly random_homogeneous(Gen& g, const std::shared_ptr<const PolyRing>& r, int d, int terms) {
  auto mons = monomials(r, d);
  auto p = MultiPoly::zero(r);
  for (int i = 0; i < terms; ++i)
    p += mons[static_cast<std::size_t>(g.uniform(0, static_cast<int>(mons.size()) - 1))].scaled(g.fq_nonzero(r->field()));
  return p;
}

}  // namespace testsupport
