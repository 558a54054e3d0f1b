#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "splitmod/affine_grassmannian.hpp"
#include "splitmod/census.hpp"
#include "support.hpp"

using namespace splitmod;
using testsupport::Gen;

namespace {

using L = StratumLabel;

RatContext U3() { return rat_context(3, Var::u); }

RationalFunction mono(RatContext c, int k) { return RationalFunction::monomial(c, Fq::one(c.field), k); }

RMatrix diag(RatContext c, const std::vector<int>& e) { return smith_diagonal(c, e); }

Subspace<Fq> span_b(int n, const std::vector<int>& labels) {
  return Frame(n).span_b<Fq>(&GaloisField::get(3), labels);
}

// Random lattice between u lambda and u^-1 lambda: Laurent columns in that
// window together with u e_i.
LaurentLattice window_lattice(Gen& g, RatContext c, int n) {
  RMatrix m(c, n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = g.laurent(c, -1, 1);
  for (int i = 0; i < n; ++i) m(i, n + i) = mono(c, 1);
  return LaurentLattice(m);
}

// u-integral matrix with unit determinant: unipotent times a permutation-ish
// invertible constant matrix.
RMatrix local_unimodular(Gen& g, RatContext c, int n) {
  const auto* f = c.field;
  auto A = g.fq_invertible(f, n);
  RMatrix m(c, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = RationalFunction::constant(c, A(i, j)) + mono(c, 1) * g.local_integral(c);
  return m;
}

// Frame vectors of a lattice between u^2 lambda_m and lambda_m: coefficients
// of u^0 and u^1 in the lambda_m-basis, for each generator and u times it.
Subspace<Fq> reduction(const LaurentLattice& lat, int n) {
  auto c = lat.context();
  const int m = n / 2;
  Matrix<Fq> rows(c.field, 2 * n, 2 * n);
  for (int col = 0; col < n; ++col)
    for (int shift = 0; shift < 2; ++shift)
      for (int i = 0; i < n; ++i) {
        auto x = lat.generators()(i, col) * mono(c, shift);
        if (i < m) x = x * mono(c, 1);  // e_i = u times the lambda-basis vector for i < m
        REQUIRE(x.is_integral());
        auto s = TruncatedSeries::from_rational(SeriesContext{c.field, 2, c.var}, x);
        rows(2 * col + shift, i) = s.coeff(0);
        rows(2 * col + shift, n + i) = s.coeff(1);
      }
  return Subspace<Fq>(rows);
}

}  // namespace

TEST_CASE("laurent_truncate and hermite_form") {
  auto c = U3();
  auto f = RationalFunction(c, UPoly(c.field, {1}), UPoly(c.field, {1, 1}));  // 1/(1+u) = 1 - u + u^2 - ...
  CHECK(laurent_truncate(f, 3) == RationalFunction(c, UPoly(c.field, {1, 2, 1})));
  CHECK(laurent_truncate(f.shifted(-2), 0) == mono(c, -2) - mono(c, -1));
  CHECK(laurent_truncate(mono(c, 4), 2).is_zero());

  RMatrix g(c, 2, 2);
  g(0, 0) = mono(c, 1);
  g(1, 0) = f;
  g(1, 1) = mono(c, 2);
  auto h = hermite_form(g);
  CHECK(h(0, 0) == mono(c, 1));
  CHECK(h(0, 1).is_zero());
  CHECK(h(1, 1) == mono(c, 2));
  CHECK(h(1, 0) == laurent_truncate(f, 2));
  CHECK_THROWS_AS(hermite_form(RMatrix(c, 2, 2)), Error);

  Gen gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    int n = gen.uniform(1, 4);
    auto lat = window_lattice(gen, c, n);
    auto moved = LaurentLattice(lat.generators() * local_unimodular(gen, c, n));
    CHECK(moved == lat);
    CHECK(lat.contains(lat.scaled(1)));
    CHECK_FALSE(lat.scaled(1).contains(lat));
  }
}

TEST_CASE("lattice_dual examples") {
  auto c = U3();
  for (int n : {1, 3, 5}) {
    auto l0 = base_lattice(c, n, Variant::Selfdual);
    CHECK(l0.dual() == l0);
  }
  auto lm = base_lattice(c, 4, Variant::Pimodular);
  CHECK(lm.dual() == lm.scaled(1));
  CHECK(lm.dual(DualForm::SymmetricTrace) == lm);
  auto lam = base_lattice(c, 6, Variant::Pimodular);
  CHECK(lam.scaled(1).dual() == lam.dual().scaled(-1));
  // F = t Lambda gives u lambda_m; its inverse image under u^-1 is the base point
  auto LF = lattice_from_point(Frame(4).t_lambda<Fq>(&GaloisField::get(3)), c);
  auto base = LF.scaled(-1);
  CHECK(base == lm);
  CHECK(base.dual() == base.scaled(1));
}

TEST_CASE("lattice_dual is an involution with the scaling rule") {
  auto c = U3();
  Gen g(1000);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = g.uniform(1, 4);
    auto lat = window_lattice(g, c, n);
    INFO("trial " << trial);
    CHECK(lat.dual().dual() == lat);
    CHECK(lat.dual(DualForm::SymmetricTrace).dual(DualForm::SymmetricTrace) == lat);
    int k = g.uniform(-2, 2);
    CHECK(lat.scaled(k).dual() == lat.dual().scaled(-k));
    // containment reverses
    auto bigger = lat.sum(window_lattice(g, c, n));
    CHECK(lat.dual().contains(bigger.dual()));
  }
}

TEST_CASE("lattice_type examples") {
  auto c = U3();
  auto lm = base_lattice(c, 4, Variant::Pimodular);
  CHECK(lattice_type(lm, lm) == std::vector<int>{0, 0, 0, 0});
  auto e1 = lm.transformed(coweight_matrix(c, 4, 1, Variant::Pimodular));
  CHECK(lattice_type(e1, lm) == std::vector<int>{-1, 0, 0, 1});
  CHECK(lattice_type(lm.scaled(1), lm) == std::vector<int>{1, 1, 1, 1});
  CHECK(coweight_type(4, 2) == std::vector<int>{-1, -1, 1, 1});
  auto e1m = diag(c, {1, 0, 0, -1});
  e1m(3, 3) = -e1m(3, 3);
  CHECK(coweight_matrix(c, 4, 1, Variant::Pimodular) == e1m);
  auto sd = coweight_matrix(c, 5, 1, Variant::Selfdual);
  CHECK(sd(2, 2) == -RationalFunction::one(c));
  CHECK_THROWS_AS(coweight_matrix(c, 4, 3, Variant::Pimodular), Error);
  CHECK_THROWS_AS(coweight_matrix(c, 5, 1, Variant::Pimodular), Error);
}

TEST_CASE("lattice_type is invariant under local unimodular column changes") {
  auto c = U3();
  Gen g(31);
  for (int trial = 0; trial < 300; ++trial) {
    int n = g.uniform(2, 4);
    auto a = window_lattice(g, c, n), b = window_lattice(g, c, n);
    auto t = lattice_type(a, b);
    auto a2 = LaurentLattice(a.generators() * local_unimodular(g, c, n));
    auto b2 = LaurentLattice(b.generators() * local_unimodular(g, c, n));
    CHECK(lattice_type(a2, b2) == t);
    CHECK(std::is_sorted(t.begin(), t.end()));
  }
}

TEST_CASE("admissible_set examples") {
  auto idx = [](const std::vector<CoweightLabel>& v) {
    std::vector<int> out;
    for (const auto& x : v) out.push_back(x.index);
    return out;
  };
  CHECK(idx(admissible_set(Variant::Selfdual, 2, 3)) == std::vector<int>{2, 1, 0});
  CHECK(idx(admissible_set(Variant::Pimodular, 2, 2)) == std::vector<int>{2, 0});
  CHECK(idx(admissible_set(Variant::Pimodular, 3, 4)) == std::vector<int>{3, 1});
  CHECK(admissible_set(Variant::Pimodular, 3, 4)[0].to_string() == "lambda_3");
  CHECK_THROWS_AS(admissible_set(Variant::Pimodular, 3, 2), Error);
}

TEST_CASE("schubert_cell examples") {
  auto c = U3();
  auto lm = base_lattice(c, 4, Variant::Pimodular);
  CHECK(schubert_cell(lm, Variant::Pimodular) == 0);
  auto F = span_b(4, {1, 2, 5, 6});
  auto L = lattice_from_point(F, c).scaled(-1);
  CHECK(schubert_cell(L, Variant::Pimodular) == 2);
  auto e2 = lm.transformed(coweight_matrix(c, 4, 2, Variant::Pimodular));
  CHECK(lattice_type(e2, lm) == std::vector<int>{-1, -1, 1, 1});
  CHECK(schubert_cell(e2, Variant::Pimodular) == 2);
  try {
    schubert_cell(lm.scaled(1), Variant::Pimodular);
    FAIL("expected NotInGrassmannian");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInGrassmannian);
  }
  for (int n : {3, 5, 7})
    for (int i = 0; i <= n / 2; ++i) {
      auto l0 = base_lattice(c, n, Variant::Selfdual);
      auto Li = l0.transformed(coweight_matrix(c, n, i, Variant::Selfdual));
      CHECK(in_grassmannian(Li, Variant::Selfdual));
      CHECK(schubert_cell(Li, Variant::Selfdual) == i);
      CHECK(in_schubert_variety(Li, i, Variant::Selfdual));
      if (i > 0) CHECK_FALSE(in_schubert_variety(Li, i - 1, Variant::Selfdual));
    }
  for (int n : {2, 4, 6, 8})
    for (int i = 0; i <= n / 2; ++i) {
      auto Li = base_lattice(c, n, Variant::Pimodular).transformed(coweight_matrix(c, n, i, Variant::Pimodular));
      CHECK(schubert_cell(Li, Variant::Pimodular) == i);
      CHECK(in_schubert_variety(Li, i + 2, Variant::Pimodular));
      CHECK_FALSE(in_schubert_variety(Li, i + 1, Variant::Pimodular));
    }
}

TEST_CASE("demazure_membership examples") {
  auto c = U3();
  auto lm = base_lattice(c, 4, Variant::Pimodular);
  CHECK(demazure_membership(lm, lm, 0, Variant::Pimodular).ok());
  auto e1 = lm.transformed(coweight_matrix(c, 4, 1, Variant::Pimodular));
  auto bad = demazure_membership(e1, lm, 0, Variant::Pimodular);
  CHECK_FALSE(bad.c4);
  CHECK_FALSE(bad.ok());

  for (int n : {2, 4, 6, 8})
    for (int i = 0; i <= n / 2; ++i) {
      auto [L, Lp] = standard_demazure_pair(c, n, i, Variant::Pimodular);
      INFO("pimodular n=" << n << " i=" << i);
      CHECK(demazure_membership(L, Lp, i, Variant::Pimodular).ok());
      if (i > 0) CHECK_FALSE(demazure_membership(L, Lp, i - 1, Variant::Pimodular).ok());
    }
  for (int n : {1, 3, 5, 7})
    for (int i = 0; i <= n / 2; ++i) {
      auto [L, Lp] = standard_demazure_pair(c, n, i, Variant::Selfdual);
      INFO("selfdual n=" << n << " i=" << i);
      CHECK(demazure_membership(L, Lp, i, Variant::Selfdual).ok());
    }
}

TEST_CASE("lattice_from_point examples") {
  auto c = U3();
  const auto* f = &GaloisField::get(3);
  Frame fr(4);
  auto lm = base_lattice(c, 4, Variant::Pimodular);
  CHECK(lattice_from_point(fr.t_lambda<Fq>(f), c) == lm.scaled(1));
  CHECK(lattice_from_point(Subspace<Fq>::full(f, 8), c) == lm);
  // G = span(b5, b6): (u, u, u^2, u^2) in the lambda_m-basis, (1, 1, u^2, u^2) in the e-basis
  auto LG = lattice_from_point(span_b(4, {5, 6}), c);
  CHECK(LG == LaurentLattice::diagonal(c, {0, 0, 2, 2}));
  CHECK(LG == lm.transformed(diag(c, {1, 1, 2, 2})));
  CHECK_THROWS_AS(lattice_from_point(span_b(4, {1}), c), Error);
}

TEST_CASE("lattice_from_point agrees with the reduction oracle on census points") {
  auto c = U3();
  for (auto [n, s] : std::vector<std::pair<int, int>>{{4, 1}, {4, 2}}) {
    auto cen = census({n, s, 3, CensusStrategy::Exhaustive, 0, 1, 0, true});
    auto lm = base_lattice(c, n, Variant::Pimodular);
    for (const auto& p : cen.points) {
      auto LF = lattice_from_point(p.F, c), LG = lattice_from_point(p.G, c);
      CHECK(reduction(LF, n) == p.F);
      CHECK(reduction(LG, n) == p.G);
      CHECK(lm.contains(LF));
      CHECK(LF.contains(LG));
      CHECK(LG.contains(lm.scaled(2)));
      // isotropy of F is the duality of its lattice
      CHECK(LF == LF.dual().scaled(1));
      CHECK(LF == LF.dual(DualForm::SymmetricTrace).scaled(2));
    }
  }
}

TEST_CASE("phi_map examples") {
  auto c = U3();
  Frame fr(4);
  const auto* f = &GaloisField::get(3);
  auto r0 = phi_map(fr.t_lambda<Fq>(f), span_b(4, {5, 6}), 2);
  CHECK(r0.label == L{0, 2});
  CHECK(r0.L == base_lattice(c, 4, Variant::Pimodular));
  CHECK(r0.cell == 0);
  CHECK(r0.demazure.ok());
  CHECK(r0.ok());

  auto r2 = phi_map(span_b(4, {1, 2, 5, 6}), span_b(4, {5, 6}), 2);
  CHECK(r2.label == L{2, 2});
  CHECK(r2.cell == 2);
  CHECK(r2.demazure.ok());
  CHECK(r2.ok());

  try {
    phi_map(fr.t_lambda<Fq>(f), span_b(4, {5, 8}), 2);
    FAIL("expected NotInZ");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInZ);
  }
}

TEST_CASE("phi_map over the exhaustive (4,2,3) census") {
  auto cen = census({4, 2, 3, CensusStrategy::Exhaustive, 0, 1, 0, true});
  long long in_z = 0, not_z = 0;
  for (const auto& p : cen.points) {
    if (p.label.l != 2) {
      CHECK_THROWS_AS(phi_map(p.F, p.G, 2), Error);
      ++not_z;
      continue;
    }
    auto r = phi_map(p.F, p.G, 2);
    CHECK(r.ok());
    CHECK(r.L == lattice_from_point(p.F, U3()).scaled(-1));
    CHECK(r.cell == p.label.h);
    ++in_z;
  }
  CHECK(in_z == 40 + 120);
  CHECK(not_z == 90);
}

TEST_CASE("tau_fiber_check examples") {
  auto t = tau_fiber_check(census({4, 2, 3, CensusStrategy::Exhaustive, 0, 1, 0, true}));
  CHECK(t.ok());
  REQUIRE(t.cells.size() == 2);
  CHECK(t.cells.at(0) == std::set<L>{{0, 0}, {0, 2}});
  CHECK(t.cells.at(2) == std::set<L>{{2, 2}});
  CHECK(t.counts.at(0) == 90 + 40);
  CHECK(t.counts.at(2) == 120);

  auto t1 = tau_fiber_check(census({4, 1, 3, CensusStrategy::Exhaustive, 0, 1, 0, true}));
  CHECK(t1.ok());
  CHECK(t1.cells.size() == 1);
  CHECK(t1.cells.at(1) == std::set<L>{{1, 1}});

  auto t63 = tau_fiber_check(census({6, 3, 3, CensusStrategy::ChartSampled, 400, 7, 0, true}));
  CHECK(t63.h_matches_cell);
  for (const auto& [k, labels] : t63.cells) CHECK((k == 1 || k == 3));

  CHECK_THROWS_AS(tau_fiber_check(census({4, 2, 3, CensusStrategy::Exhaustive, 0, 1, 0, false})), Error);
}

TEST_CASE("schubert dimensions against stratum dimensions") {
  for (int n = 2; n <= 12; n += 2)
    for (int s = 1; s <= n / 2; ++s) {
      const int r = n - s;
      // Z -> S_s is birational and X_{s,s} is open in Z
      CHECK(stratum_dimension(r, s, s, s) == schubert_dimension(n, s));
      // X_{h,s} maps onto C_h
      for (int h = s % 2; h <= s; h += 2) CHECK(stratum_dimension(r, s, h, s) >= schubert_dimension(n, h));
    }
}
