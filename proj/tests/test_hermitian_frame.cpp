#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "splitmod/frame.hpp"
#include "support.hpp"

using namespace splitmod;
using testsupport::Gen;

namespace {

const GaloisField* F3() { return &GaloisField::get(3); }

// Brute-force oracle: all vectors of t Lambda over F_3 orthogonal to U for
// the modified pairing, spanned into a subspace.
Subspace<Fq> brute_force_mod_orthogonal(const Frame& fr, const Subspace<Fq>& u) {
  const auto* f = F3();
  const int n = fr.n();
  std::vector<std::vector<Fq>> hits;
  int total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (int code = 0; code < total; ++code) {
    std::vector<Fq> v(static_cast<std::size_t>(2 * n), Fq::zero(f));
    int c = code;
    for (int i = 0; i < n; ++i) {
      v[n + i] = Fq::from_int(f, c % 3);
      c /= 3;
    }
    bool ok = true;
    for (int k = 0; k < u.dim() && ok; ++k) ok = fr.pair(u.basis().row_vec(k), v, PairingKind::Modified).is_zero();
    if (ok) hits.push_back(v);
  }
  Matrix<Fq> m(f, static_cast<int>(hits.size()), 2 * n);
  for (std::size_t i = 0; i < hits.size(); ++i)
    for (int j = 0; j < 2 * n; ++j) m(static_cast<int>(i), j) = hits[i][j];
  return Subspace<Fq>(m);
}

Subspace<Fq> random_in_t_lambda(Gen& g, const Frame& fr, int k) {
  const auto* f = F3();
  Matrix<Fq> m(f, k, fr.dim());
  for (int i = 0; i < k; ++i)
    for (int j = fr.n(); j < fr.dim(); ++j) m(i, j) = g.fq(f);
  return Subspace<Fq>(m);
}

}  // namespace

TEST_CASE("build_frame examples") {
  Frame fr(4);
  CHECK(fr.gram_sym()(0, 7) == -1);
  CHECK(fr.gram_sym()(0, 6) == 0);
  auto t = fr.t_matrix<Fq>(F3());
  auto b1 = Matrix<Fq>::column(F3(), fr.b<Fq>(F3(), 1));
  auto b5 = Matrix<Fq>::column(F3(), fr.b<Fq>(F3(), 5));
  CHECK(t * b1 == b5);
  CHECK((t * b5).is_zero());
  CHECK((t * t).is_zero());
  CHECK(rank(t) == 4);
  Frame f6(6);
  const auto& g = f6.gram_mod();
  CHECK(g.transpose() == -g);
  CHECK(g * g == -IntMatrix::identity(6));
  CHECK(f6.J() * f6.J() == -IntMatrix::identity(6));
  CHECK_THROWS_AS(Frame(5), Error);
  CHECK_THROWS_AS(Frame(2), Error);
  try {
    Frame bad(7);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadDimension);
  }
}

TEST_CASE("image(t) = kernel(t) = t Lambda") {
  for (int n : {4, 6, 8}) {
    Frame fr(n);
    auto t = fr.t_matrix<Fq>(F3());
    auto full = Subspace<Fq>::full(F3(), fr.dim());
    CHECK(full.image(t) == fr.t_lambda<Fq>(F3()));
    CHECK(kernel(t) == fr.t_lambda<Fq>(F3()));
  }
}

TEST_CASE("pair examples") {
  Frame fr(4);
  const auto* f = F3();
  CHECK(fr.pair(fr.b<Fq>(f, 5), fr.b<Fq>(f, 8), PairingKind::Modified) == Fq::one(f));
  CHECK(fr.pair(fr.b<Fq>(f, 1), fr.b<Fq>(f, 8), PairingKind::Symmetric) == -Fq::one(f));
  CHECK_THROWS_AS(fr.pair(fr.b<Fq>(f, 1), fr.b<Fq>(f, 8), PairingKind::Modified), Error);
  Gen g(1);
  for (int trial = 0; trial < 500; ++trial) {
    auto x = random_in_t_lambda(g, fr, 1).basis();
    if (x.rows() == 0) continue;
    auto v = x.row_vec(0);
    CHECK(fr.pair(v, v, PairingKind::Modified).is_zero());
    std::vector<Fq> a, b;
    for (int i = 0; i < 8; ++i) {
      a.push_back(g.fq(f));
      b.push_back(g.fq(f));
    }
    CHECK(fr.pair(a, b, PairingKind::Symmetric) == fr.pair(b, a, PairingKind::Symmetric));
  }
}

TEST_CASE("orthogonal examples") {
  Frame fr(4);
  const auto* f = F3();
  auto u = fr.span_b<Fq>(f, {5, 8});
  auto perp = fr.orthogonal(u, PairingKind::Modified);
  CHECK(perp == brute_force_mod_orthogonal(fr, u));
  CHECK(perp == fr.span_b<Fq>(f, {6, 7}));
  CHECK(fr.orthogonal(fr.t_lambda<Fq>(f), PairingKind::Modified).dim() == 0);
  CHECK(fr.orthogonal(Subspace<Fq>::zero(f, 8), PairingKind::Modified) == fr.t_lambda<Fq>(f));
  CHECK_THROWS_AS(fr.orthogonal(fr.span_b<Fq>(f, {1}), PairingKind::Modified), Error);
}

TEST_CASE("normal_form_gram examples") {
  // eps-stratum at s = 2, n = 8: blocks 2, 2, 2, 2
  auto e = normal_form_gram(2, 2, 2, 8, GramCase::EpsStratum);
  IntMatrix expect(8, 8);
  for (int i = 0; i < 2; ++i) {
    expect(i, 6 + i) = 1;
    expect(6 + i, i) = -1;
    expect(2 + i, 4 + i) = 1;
    expect(4 + i, 2 + i) = -1;
  }
  CHECK(e.T == expect);
  auto g0 = normal_form_gram(0, 0, 2, 6, GramCase::General);
  IntMatrix bd(6, 6);
  bd(0, 1) = 1;
  bd(1, 0) = -1;
  bd(2, 4) = 1;
  bd(4, 2) = -1;
  bd(3, 5) = 1;
  bd(5, 3) = -1;
  CHECK(g0.T == bd);
  for (int n : {4, 6, 8, 10})
    for (int s = 1; s <= n / 2; ++s)
      for (int l = s % 2; l <= s; l += 2)
        for (int h = s % 2; h <= l; h += 2) {
          for (auto kind : {GramCase::General, GramCase::SchubertPimodular}) {
            auto g = normal_form_gram(h, l, s, n, kind);
            CHECK(g.T.transpose() == -g.T);
            auto p = pairing_permutation(g.T);
            auto P = permutation_matrix(p);
            Frame fr(n);
            CHECK(P.transpose() * fr.gram_mod() * P == g.T);
          }
          auto sd = normal_form_gram(h, l, s, n, GramCase::SchubertSelfdual);
          CHECK(sd.T.transpose() == sd.T);
        }
  CHECK_THROWS_AS(normal_form_gram(2, 1, 3, 8, GramCase::General), Error);
  CHECK_THROWS_AS(normal_form_gram(0, 1, 2, 8, GramCase::General), Error);
}

TEST_CASE("symmetric orthogonal of t Lambda is itself") {
  for (int n : {4, 6, 8, 10}) {
    Frame fr(n);
    auto tl = fr.t_lambda<Fq>(F3());
    CHECK(fr.orthogonal(tl, PairingKind::Symmetric) == tl);
  }
}

TEST_CASE("modified orthogonal is a perfect inclusion-reversing involution") {
  Gen g(99);
  for (int n : {4, 6, 8}) {
    Frame fr(n);
    for (int trial = 0; trial < 300; ++trial) {
      auto u = random_in_t_lambda(g, fr, g.uniform(0, n));
      auto v = u.sum(random_in_t_lambda(g, fr, g.uniform(0, 2)));
      auto pu = fr.orthogonal(u, PairingKind::Modified);
      auto pv = fr.orthogonal(v, PairingKind::Modified);
      CHECK(u.dim() + pu.dim() == n);
      CHECK(fr.orthogonal(pu, PairingKind::Modified) == u);
      CHECK(pu.contains(pv));
      auto su = fr.orthogonal(u, PairingKind::Symmetric);
      CHECK(u.dim() + su.dim() == 2 * n);
      CHECK(fr.orthogonal(su, PairingKind::Symmetric) == u);
    }
  }
}

TEST_CASE("frame over pi: t^2 = pi^2") {
  auto ctx = rat_context(5, Var::pi);
  auto pi = RationalFunction::variable(ctx);
  Frame fr(4);
  auto t = fr.t_matrix<RationalFunction>(ctx, pi);
  CHECK(t * t == (pi * pi) * Matrix<RationalFunction>::identity(ctx, 8));
}
