#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "splitmod/smith.hpp"
#include "support.hpp"

using namespace splitmod;
using testsupport::Gen;
using testsupport::random_local_unit;

namespace {

const GaloisField* F(unsigned q) { return &GaloisField::get(q); }

// Unit vector e_i in F_q^d.
std::vector<Fq> unit(const GaloisField* f, int d, int i) {
  std::vector<Fq> v(static_cast<std::size_t>(d), Fq::zero(f));
  v[static_cast<std::size_t>(i)] = Fq::one(f);
  return v;
}

// Random matrix invertible over the u-local ring: lower times upper with
// unit diagonals, times a permutation.

}  // namespace

TEST_CASE("rref examples") {
  auto r = rref(Matrix<Fq>::from_ints(F(5), {{1, 2}, {2, 4}}));
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<int>{0});
  auto id = Matrix<Fq>::identity(F(3), 3);
  auto ri = rref(id);
  CHECK(ri.m == id);
  CHECK(ri.rank == 3);
  auto ctx = rat_context(3);
  auto u = RationalFunction::variable(ctx);
  RMatrix m(ctx, 2, 2, {u, RationalFunction::one(ctx), u * u, u});
  auto ru = rref(m);
  CHECK(ru.rank == 1);
  CHECK(ru.pivots == std::vector<int>{0});
  SeriesContext sc{F(3), 3, Var::u};
  CHECK_THROWS_AS(rref(Matrix<TruncatedSeries>::identity(sc, 2)), Error);
  try {
    rref(Matrix<DualNumber>::identity(F(3), 2));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAField);
  }
}

TEST_CASE("kernel examples") {
  CHECK(kernel(Matrix<Fq>(F(3), 2, 2)).dim() == 2);
  CHECK(kernel(Matrix<Fq>::identity(F(3), 3)).dim() == 0);
  CHECK(kernel(Matrix<Fq>::from_ints(F(3), {{0, 1}, {-1, 0}})).dim() == 0);
  auto k = kernel(Matrix<Fq>::from_ints(F(5), {{1, 2, 3}}));
  CHECK(k.dim() == 2);
  for (int i = 0; i < k.dim(); ++i) {
    auto v = k.basis().row_vec(i);
    CHECK((v[0] + Fq::from_int(F(5), 2) * v[1] + Fq::from_int(F(5), 3) * v[2]).is_zero());
  }
}

TEST_CASE("subspace_combine examples") {
  const auto* f = F(3);
  using S = Subspace<Fq>;
  auto e1 = S::coordinate(f, 4, {0}), e2 = S::coordinate(f, 4, {1});
  S out;
  subspace_combine(e1, e2, CombineMode::Intersect, &out);
  CHECK(out.dim() == 0);
  auto u = S::coordinate(f, 4, {0, 2});
  subspace_combine(u, u, CombineMode::Sum, &out);
  CHECK(out == u);
  CHECK(subspace_combine(u, u, CombineMode::Contains).flag);
  CHECK(subspace_combine(u, u, CombineMode::Equals).flag);
  auto a = S::coordinate(f, 4, {0, 1}), b = S::coordinate(f, 4, {1, 2});
  subspace_combine(a, b, CombineMode::Intersect, &out);
  CHECK(out == e2);
  CHECK_THROWS_AS(subspace_combine(a, S::zero(f, 3), CombineMode::Sum, &out), Error);
  CHECK(a.contains(unit(f, 4, 1)));
  CHECK(!a.contains(unit(f, 4, 3)));
}

TEST_CASE("smith_form_local examples") {
  auto ctx = rat_context(3);
  auto u = RationalFunction::variable(ctx);
  auto zero = RationalFunction::zero(ctx), one = RationalFunction::one(ctx);
  CHECK(smith_form_local(RMatrix(ctx, 2, 2, {u, zero, zero, one})).type == std::vector<int>{0, 1});
  CHECK(smith_form_local(RMatrix::identity(ctx, 3)).type == std::vector<int>{0, 0, 0});
  auto s = smith_form_local(RMatrix(ctx, 2, 2, {zero, u, u, zero}));
  CHECK(s.type == std::vector<int>{1, 1});
  CHECK_THROWS_AS(smith_form_local(RMatrix(ctx, 2, 2, {u, u, u, u})), Error);
  // negative exponents come through the global shift
  auto t = smith_form_local(RMatrix(ctx, 2, 2, {u.inverse(), zero, zero, u}));
  CHECK(t.type == std::vector<int>{-1, 1});
  CHECK(t.shift == -1);
}

TEST_CASE("rref is idempotent and rank is invariant under row operations") {
  Gen g(2024);
  for (unsigned q : {3u, 5u, 9u}) {
    const auto* f = F(q);
    for (int trial = 0; trial < 1000; ++trial) {
      int r = g.uniform(1, 6), c = g.uniform(1, 7);
      auto m = g.fq_matrix(f, r, c);
      auto e = rref(m);
      CHECK(rref(e.m).m == e.m);
      auto p = g.fq_invertible(f, r);
      auto e2 = rref(p * m);
      CHECK(e2.rank == e.rank);
      CHECK(e2.m == e.m);
    }
  }
  auto ctx = rat_context(3);
  for (int trial = 0; trial < 1000; ++trial) {
    int r = g.uniform(1, 3), c = g.uniform(1, 4);
    auto m = g.matrix<RationalFunction>(ctx, r, c, [&] { return g.coin() ? g.rat(ctx, 1) : RationalFunction::zero(ctx); });
    auto e = rref(m);
    CHECK(rref(e.m).m == e.m);
    auto p = g.matrix<RationalFunction>(ctx, r, r, [&] { return g.rat(ctx, 1); });
    if (determinant(p).is_zero()) continue;
    CHECK(rref(p * m).m == e.m);
  }
}

TEST_CASE("Grassmann dimension identity") {
  Gen g(77);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto* f = F(trial % 2 ? 3 : 5);
    int d = g.uniform(1, 8);
    Subspace<Fq> u(g.fq_matrix(f, g.uniform(0, d), d)), v(g.fq_matrix(f, g.uniform(0, d), d));
    auto s = u.sum(v), i = u.intersect(v);
    CHECK(u.dim() + v.dim() == s.dim() + i.dim());
    CHECK(s.contains(u));
    CHECK(u.contains(i));
    CHECK(v.contains(i));
    CHECK(u.annihilator().annihilator() == u);
  }
}

TEST_CASE("inverse, image, preimage, charpoly") {
  Gen g(9);
  const auto* f = F(5);
  for (int trial = 0; trial < 300; ++trial) {
    int n = g.uniform(1, 5);
    auto a = g.fq_invertible(f, n);
    CHECK(a * inverse(a) == Matrix<Fq>::identity(f, n));
    auto m = g.fq_matrix(f, n, n);
    Subspace<Fq> u(g.fq_matrix(f, g.uniform(0, n), n));
    auto img = u.image(m);
    auto pre = u.preimage(m);
    CHECK(u.contains(pre.image(m)));
    CHECK(img.dim() <= u.dim());
    // Cayley-Hamilton
    auto c = charpoly(m);
    auto acc = Matrix<Fq>(f, n, n);
    for (auto& coef : c) acc = acc * m + coef * Matrix<Fq>::identity(f, n);
    CHECK(acc.is_zero());
    // determinant against elimination
    CHECK(determinant(m).is_zero() == (rank(m) < n));
  }
  CHECK_THROWS_AS(inverse(Matrix<Fq>(f, 2, 2)), Error);
  CHECK(inverse(Matrix<Fq>(f, 0, 0)).rows() == 0);
}

TEST_CASE("subspaces over local rings are direct summands") {
  const auto* f = F(3);
  auto e = DualNumber::eps(f), one = DualNumber::one(f), zero = DualNumber::zero(f);
  Matrix<DualNumber> m(f, 2, 3, {one, e, zero, e, one, e});
  Subspace<DualNumber> s(m);
  CHECK(s.dim() == 2);
  CHECK(s.pivots() == std::vector<int>{0, 1});
  CHECK(s.contains(std::vector<DualNumber>{one + e, one, e}));
  CHECK(!s.contains(std::vector<DualNumber>{zero, zero, e}));
  CHECK_THROWS_AS(Subspace<DualNumber>(Matrix<DualNumber>(f, 1, 2, {e, zero})), Error);
}

TEST_CASE("smith_form_local transforms re-multiply exactly") {
  Gen g(31337);
  auto ctx = rat_context(3);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = g.uniform(1, 4);
    std::vector<int> type;
    for (int i = 0; i < n; ++i) type.push_back(g.uniform(-1, 2));
    std::sort(type.begin(), type.end());
    auto d = smith_diagonal(ctx, type);
    auto p = random_local_unit(g, ctx, n), q = random_local_unit(g, ctx, n);
    auto m = p * d * q;
    auto s = smith_form_local(m);
    CHECK(s.U * m * s.V == smith_diagonal(ctx, s.type));
    CHECK(is_local_unit_matrix(s.U));
    CHECK(is_local_unit_matrix(s.V));
    CHECK(s.type == type);
  }
}
