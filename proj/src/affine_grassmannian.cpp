#include "splitmod/affine_grassmannian.hpp"

#include <algorithm>
#include <numeric>

namespace splitmod {

const char* to_string(DualForm f) { return f == DualForm::HermitianPhi ? "hermitian-phi" : "symmetric-trace"; }

const char* to_string(Variant v) { return v == Variant::Selfdual ? "selfdual" : "pimodular"; }

Variant parse_variant(const std::string& s) {
  if (s == "selfdual") return Variant::Selfdual;
  if (s == "pimodular") return Variant::Pimodular;
  throw Error(ErrorKind::BadParameters, "unknown variant '" + s + "'");
}

RationalFunction laurent_truncate(const RationalFunction& f, int a) {
  const auto ctx = f.context();
  auto out = RationalFunction::zero(ctx);
  if (f.is_zero()) return out;
  const int v = f.valuation();
  if (v >= a) return out;
  auto s = TruncatedSeries::from_rational(SeriesContext{ctx.field, a - v, ctx.var}, f.shifted(-v));
  for (int k = 0; k < a - v; ++k) {
    Fq c = s.coeff(k);
    if (!c.is_zero()) out += RationalFunction::monomial(ctx, c, k + v);
  }
  return out;
}

namespace {

// col_j -= f col_i, rows from r0
void col_axpy(RMatrix& h, int j, int i, const RationalFunction& f, int r0 = 0) {
  for (int r = r0; r < h.rows(); ++r)
    if (!h(r, i).is_zero()) h(r, j) -= f * h(r, i);
}

void col_swap(RMatrix& h, int a, int b) {
  if (a == b) return;
  for (int r = 0; r < h.rows(); ++r) std::swap(h(r, a), h(r, b));
}

RMatrix sigma(const RMatrix& m) {
  return m.map([](const RationalFunction& x) { return x.sigma(); });
}

RMatrix antidiagonal(RatContext ctx, int n) {
  RMatrix h(ctx, n, n);
  for (int i = 0; i < n; ++i) h(i, n - 1 - i) = RationalFunction::one(ctx);
  return h;
}

bool integral(const RMatrix& m) {
  return std::all_of(m.data().begin(), m.data().end(), [](const RationalFunction& x) { return x.is_integral(); });
}

}  // namespace

RMatrix hermite_form(const RMatrix& g) {
  const auto ctx = g.context();
  const int n = g.rows(), N = g.cols();
  RMatrix h = g;
  for (int i = 0; i < n; ++i) {
    int best = -1, bv = kInfiniteValuation;
    for (int j = i; j < N; ++j) {
      int v = h(i, j).valuation();
      if (v < bv) {
        bv = v;
        best = j;
      }
    }
    if (best < 0) throw Error(ErrorKind::Singular, "generators do not span a full-rank lattice");
    col_swap(h, i, best);
    auto c = RationalFunction::monomial(ctx, Fq::one(ctx.field), bv) / h(i, i);
    for (int r = i; r < n; ++r) h(r, i) *= c;
    for (int j = i + 1; j < N; ++j)
      if (!h(i, j).is_zero()) col_axpy(h, j, i, h(i, j) / h(i, i), i);
  }
  h = h.block(0, 0, n, n);
  for (int i = 0; i < n; ++i) {
    const int a = h(i, i).valuation();
    for (int j = 0; j < i; ++j) {
      auto rest = h(i, j) - laurent_truncate(h(i, j), a);
      if (!rest.is_zero()) col_axpy(h, j, i, rest / h(i, i), i);
    }
  }
  return h;
}

LaurentLattice::LaurentLattice(const RMatrix& generators) : g_(hermite_form(generators)) {}

LaurentLattice LaurentLattice::standard(RatContext ctx, int n) { return LaurentLattice(RMatrix::identity(ctx, n)); }

LaurentLattice LaurentLattice::diagonal(RatContext ctx, const std::vector<int>& exponents) {
  return LaurentLattice(smith_diagonal(ctx, exponents));
}

bool LaurentLattice::contains(const LaurentLattice& o) const { return integral(inverse(g_) * o.g_); }

LaurentLattice LaurentLattice::scaled(int k) const {
  return LaurentLattice(RationalFunction::monomial(context(), Fq::one(context().field), k) * g_);
}

LaurentLattice LaurentLattice::transformed(const RMatrix& g) const { return LaurentLattice(g * g_); }

LaurentLattice LaurentLattice::sum(const LaurentLattice& o) const { return LaurentLattice(RMatrix::hstack({g_, o.g_})); }

LaurentLattice LaurentLattice::intersect(const LaurentLattice& o) const {
  return dual().sum(o.dual()).dual();
}

// {y : phi(x, y) integral for x in L} is generated by H sigma(g)^-t; the
// trace form is u phi, whose dual is u^-1 times that.
LaurentLattice LaurentLattice::dual(DualForm form) const {
  const auto ctx = context();
  RMatrix d = antidiagonal(ctx, rank()) * inverse(sigma(g_)).transpose();
  if (form == DualForm::SymmetricTrace) d = RationalFunction::monomial(ctx, Fq::one(ctx.field), -1) * d;
  return LaurentLattice(d);
}

std::vector<std::vector<std::string>> LaurentLattice::to_strings() const { return g_.to_strings(); }

std::string LaurentLattice::to_string() const { return g_.to_string(); }

LaurentLattice base_lattice(RatContext ctx, int n, Variant v) {
  if (v == Variant::Selfdual) {
    if (n % 2 == 0) throw Error(ErrorKind::BadParameters, "selfdual variant needs odd n");
    return LaurentLattice::standard(ctx, n);
  }
  if (n % 2 != 0) throw Error(ErrorKind::BadParameters, "pimodular variant needs even n");
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n / 2; ++i) e[static_cast<std::size_t>(i)] = -1;
  return LaurentLattice::diagonal(ctx, e);
}

RMatrix coweight_matrix(RatContext ctx, int n, int i, Variant v) {
  const int m = n / 2;
  if ((v == Variant::Selfdual) != (n % 2 == 1)) throw Error(ErrorKind::BadParameters, "n has the wrong parity for the variant");
  if (i < 0 || i > m) throw Error(ErrorKind::BadParameters, "need 0 <= i <= m");
  const Fq one = Fq::one(ctx.field);
  RMatrix d = RMatrix::identity(ctx, n);
  for (int k = 0; k < i; ++k) {
    d(k, k) = RationalFunction::monomial(ctx, one, 1);
    d(n - 1 - k, n - 1 - k) = RationalFunction::monomial(ctx, -one, -1);
  }
  if (v == Variant::Selfdual && i % 2 == 1) d(m, m) = -RationalFunction::one(ctx);
  return d;
}

std::vector<int> lattice_type(const LaurentLattice& L, const LaurentLattice& base) {
  if (L.rank() != base.rank()) throw Error(ErrorKind::AmbientMismatch, "lattices of different rank");
  return smith_form_local(inverse(base.generators()) * L.generators()).type;
}

std::vector<int> coweight_type(int n, int i) {
  std::vector<int> t(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < i; ++k) {
    t[static_cast<std::size_t>(k)] = -1;
    t[static_cast<std::size_t>(n - 1 - k)] = 1;
  }
  return t;
}

std::vector<CoweightLabel> admissible_set(Variant v, int s, int m) {
  if (s < 0 || s > m) throw Error(ErrorKind::BadParameters, "need 0 <= s <= m");
  std::vector<CoweightLabel> out;
  const int step = v == Variant::Selfdual ? 1 : 2;
  for (int i = s; i >= 0; i -= step) out.push_back({i, v});
  return out;
}

bool in_grassmannian(const LaurentLattice& L, Variant v) {
  return L.dual() == (v == Variant::Selfdual ? L : L.scaled(1));
}

int schubert_cell(const LaurentLattice& L, Variant v) {
  if (!in_grassmannian(L, v)) throw Error(ErrorKind::NotInGrassmannian, std::string("lattice fails the ") + to_string(v) + " duality");
  auto t = lattice_type(L, base_lattice(L.context(), L.rank(), v));
  const int k = static_cast<int>(std::count(t.begin(), t.end(), 1));
  if (t != coweight_type(L.rank(), k)) throw Error(ErrorKind::UnrecognizedType, "type is not that of any e^{-lambda_k}");
  return k;
}

bool in_schubert_variety(const LaurentLattice& L, int i, Variant v) {
  int k = -1;
  try {
    k = schubert_cell(L, v);
  } catch (const Error&) {
    return false;
  }
  return k <= i && (v == Variant::Selfdual || (i - k) % 2 == 0);
}

QuotientCheck quotient(const LaurentLattice& sub, const LaurentLattice& super) {
  QuotientCheck q;
  auto m = inverse(super.generators()) * sub.generators();
  q.included = integral(m);
  if (!q.included) return q;
  auto t = smith_form_local(m).type;
  q.length = std::accumulate(t.begin(), t.end(), 0);
  q.killed_by_u = t.empty() || t.back() <= 1;
  return q;
}

DemazureReport demazure_membership(const LaurentLattice& L, const LaurentLattice& Lp, int i, Variant v) {
  const int n = L.rank();
  DemazureReport r;
  r.i = i;
  r.variant = v;
  auto base = base_lattice(L.context(), n, v);
  r.c1 = in_schubert_variety(L, i, v);
  auto D = Lp.dual().scaled(-1);  // u^-1 L'^dual
  const int mid = v == Variant::Selfdual ? n - 2 * i : 2 * i;
  r.c2 = quotient(Lp, D).is(mid) && quotient(D, Lp.scaled(-1)).included;
  if (v == Variant::Selfdual) {
    r.c3 = quotient(base, Lp).is(i);
    r.c4 = quotient(L, Lp).is(i);
  } else {
    r.c3 = quotient(Lp, base).is(i);
    r.c4 = quotient(Lp, L).is(i);
  }
  return r;
}

std::pair<LaurentLattice, LaurentLattice> standard_demazure_pair(RatContext ctx, int n, int i, Variant v) {
  auto base = base_lattice(ctx, n, v);
  auto L = base.transformed(coweight_matrix(ctx, n, i, v));
  return {L, v == Variant::Selfdual ? base.sum(L) : base.intersect(L)};
}

LaurentLattice lattice_from_point(const Subspace<Fq>& component, RatContext ctx) {
  const int n = component.ambient() / 2, m = n / 2;
  if (component.ambient() != 2 * n || n % 2 != 0) throw Error(ErrorKind::AmbientMismatch, "component is not in a pimodular frame");
  // t-stability: b_i -> b_{n+i} -> 0
  Matrix<Fq> t(component.context(), 2 * n, 2 * n);
  for (int i = 0; i < n; ++i) t(n + i, i) = Fq::one(component.context());
  if (!component.contains_columns(t * component.basis_columns()))
    throw Error(ErrorKind::InvalidPoint, "subspace is not t-stable");
  const Fq one = Fq::one(ctx.field);
  auto eps = [&](int i, int k) {  // u^k times the i-th basis vector of lambda_m, as a power of u on e_i
    return RationalFunction::monomial(ctx, one, k + (i < m ? -1 : 0));
  };
  const int k = component.dim();
  RMatrix g(ctx, n, k + n);
  for (int c = 0; c < k; ++c)
    for (int i = 0; i < n; ++i) {
      Fq a = component.basis()(c, i), b = component.basis()(c, n + i);
      if (!a.is_zero()) g(i, c) += RationalFunction::constant(ctx, a) * eps(i, 0);
      if (!b.is_zero()) g(i, c) += RationalFunction::constant(ctx, b) * eps(i, 1);
    }
  for (int i = 0; i < n; ++i) g(i, k + i) = eps(i, 2);
  return LaurentLattice(g);
}

PhiReport phi_map(const Subspace<Fq>& F, const Subspace<Fq>& G, int s) {
  const int n = F.ambient() / 2;
  Frame fr(n);
  auto label = invariants(fr, F, G, s);
  if (label.l != s) throw Error(ErrorKind::NotInZ, "{G, G} != 0 (l = " + std::to_string(label.l) + ")");
  auto ctx = rat_context(F.context()->order(), Var::u);
  auto LF = lattice_from_point(F, ctx);
  auto LG = lattice_from_point(G, ctx);
  PhiReport r{LF.scaled(-1), LG.dual().scaled(1), label, -1, false, {}, false};
  r.lattice_F_duality = LF == LF.dual().scaled(1);
  r.cell = schubert_cell(r.L, Variant::Pimodular);
  r.demazure = demazure_membership(r.L, r.Lp, s, Variant::Pimodular);
  r.square_commutes = r.cell == label.h;
  return r;
}

TauReport tau_fiber_check(const StratumCensus& c) {
  if (c.valid > 0 && c.points.empty()) throw Error(ErrorKind::BadParameters, "census was run without keep_points");
  TauReport r;
  r.n = c.params.n;
  r.s = c.params.s;
  r.exhaustive = c.params.strategy == CensusStrategy::Exhaustive;
  auto ctx = rat_context(c.params.q, Var::u);
  for (const auto& p : c.points) {
    int k = schubert_cell(lattice_from_point(p.F, ctx).scaled(-1), Variant::Pimodular);
    r.cells[k].insert(p.label);
    ++r.counts[k];
    if (p.label.h != k) r.h_matches_cell = false;
  }
  if (r.exhaustive) {
    std::set<int> want_cells;
    for (const auto& a : admissible_set(Variant::Pimodular, r.s, r.n / 2)) want_cells.insert(a.index);
    std::set<int> got;
    for (const auto& [k, labels] : r.cells) {
      got.insert(k);
      std::set<StratumLabel> want;
      for (int l = k; l <= r.s; l += 2) want.insert({k, l});
      if (labels != want) r.labels_complete = false;
    }
    if (got != want_cells) r.labels_complete = false;
  }
  return r;
}

}  // namespace splitmod
