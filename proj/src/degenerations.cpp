#include "splitmod/degenerations.hpp"

#include <algorithm>
#include <random>

namespace splitmod {

bool ClosurePoset::leq(const StratumLabel& a, const StratumLabel& b) const { return a.h <= b.h && a.l >= b.l; }

std::vector<StratumLabel> ClosurePoset::closure_of(const StratumLabel& b) const {
  std::vector<StratumLabel> out;
  for (const auto& a : labels)
    if (leq(a, b)) out.push_back(a);
  return out;
}

std::vector<StratumLabel> ClosurePoset::maximal() const {
  std::vector<StratumLabel> out;
  for (const auto& a : labels) {
    bool top = true;
    for (const auto& b : labels)
      if (!(a == b) && leq(a, b)) top = false;
    if (top) out.push_back(a);
  }
  return out;
}

std::vector<StratumLabel> ClosurePoset::minimal() const {
  std::vector<StratumLabel> out;
  for (const auto& a : labels)
    if (is_closed(a)) out.push_back(a);
  return out;
}

bool ClosurePoset::is_open(const StratumLabel& b) const {
  for (const auto& a : labels)
    if (!(a == b) && leq(b, a)) return false;
  return true;
}

ClosurePoset closure_poset(int s) {
  if (s < 1) throw Error(ErrorKind::BadParameters, "need s >= 1");
  return {s, stratum_labels(s)};
}

namespace {

using RM = Matrix<RationalFunction>;

bool admissible(const StratumLabel& x, int s) {
  return x.h >= 0 && x.h <= x.l && x.l <= s && (x.h - s) % 2 == 0 && (x.l - s) % 2 == 0;
}

// u times the standard skew block on coordinates [from, from + 2k).
RM skew_blocks(RatContext ctx, int d, int from, int k) {
  RM m(ctx, d, d);
  auto u = RationalFunction::variable(ctx);
  for (int i = 0; i < k; ++i) {
    m(from + 2 * i, from + 2 * i + 1) = u;
    m(from + 2 * i + 1, from + 2 * i) = -u;
  }
  return m;
}

RM strict_upper(const RM& m) {
  RM out(m.context(), m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i + 1; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

Matrix<Fq> specialize(const RM& m, const GaloisField* f) {
  return m.map_to<Fq>(f, [](const RationalFunction& x) { return x.eval(Fq::zero(x.context().field)); });
}

Matrix<Fq> evaluate_in(const RM& m, const GaloisField& ext, Fq x) {
  return m.map_to<Fq>(&ext, [&](const RationalFunction& r) { return r.eval_in(ext, x); });
}

// Entries are polynomials in u with zero constant term.
bool in_u_ku(const RM& m) {
  for (const auto& x : m.data())
    if (!x.is_zero() && (!x.den().is_one() || x.valuation() < 1)) return false;
  return true;
}

}  // namespace

LiftRecord generization_lift(int n, int s, StratumLabel source, StratumLabel target, std::uint64_t seed, unsigned q) {
  Frame fr(n);
  if (s < 1 || s > n / 2) throw Error(ErrorKind::BadParameters, "need 1 <= s <= n/2");
  if (!admissible(source, s) || !admissible(target, s))
    throw Error(ErrorKind::BadTargets, "labels must satisfy h <= l <= s with h = l = s mod 2");
  if (!(source.h <= target.h && target.h <= target.l && target.l <= source.l))
    throw Error(ErrorKind::BadTargets, "target " + target.to_string() + " is not a generization of " + source.to_string());
  const GaloisField* f = &GaloisField::get(q);
  const auto ctx = RatContext{f, Var::u};
  const int d = source.l - source.h, a = target.h - source.h, b = target.l - source.h;

  // Z of rank a on the first a coordinates; Y2 - Y2^t of rank d - b on the last d - b.
  RM Z = skew_blocks(ctx, d, 0, a / 2);
  RM S = skew_blocks(ctx, d, b, (d - b) / 2);
  if (seed != 0 && d > 0) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dig(0, static_cast<int>(q) - 1);
    Matrix<Fq> P(f, d, d);
    do {
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) P(i, j) = Fq(f, static_cast<GaloisField::Code>(dig(rng)));
    } while (rank(P) < d);
    auto lift = [&](const Matrix<Fq>& m) {
      return m.map_to<RationalFunction>(ctx, [&](const Fq& x) { return RationalFunction::constant(ctx, x); });
    };
    RM Pr = lift(P), Pi = lift(inverse(P));
    Z = Pr * Z * Pr.transpose();
    S = Pi.transpose() * S * Pi;
  }
  RM Y2 = strict_upper(S);

  LiftRecord rec;
  rec.n = n;
  rec.s = s;
  rec.source = source;
  rec.target = target;
  rec.Y2 = Y2;
  rec.Z = Z;
  rec.parameters_in_u_ku = in_u_ku(Y2) && in_u_ku(Z);
  rec.lift = chart_columns_general(fr, s, source.h, source.l, Y2, Z);
  ModelPoint<RationalFunction> gen;
  gen.frame = &fr;
  gen.s = s;
  gen.pi = RationalFunction::zero(ctx);
  gen.F = Subspace<RationalFunction>(rec.lift.F.transpose());
  gen.G = Subspace<RationalFunction>(rec.lift.G.transpose());
  auto rep = validate(gen);
  rec.conditions_hold = rep.verdict() && rep.rank_tF == target.h;
  if (rep.conditions_1_to_3()) rec.generic = invariants(gen);
  rec.generic_as_claimed = rep.conditions_1_to_3() && rec.generic == target;

  auto base = chart_point_general(fr, s, source.h, source.l, Matrix<Fq>(f, d, d), Matrix<Fq>(f, d, d));
  rec.base_F = base.F;
  rec.base_G = base.G;
  auto F0 = Subspace<Fq>(specialize(rec.lift.F, f).transpose());
  auto G0 = Subspace<Fq>(specialize(rec.lift.G, f).transpose());
  bool full = F0.dim() == n && G0.dim() == s;
  rec.specializes_to_base = full && F0 == rec.base_F && G0 == rec.base_G;
  if (full) {
    auto r0 = validate(fr, F0, G0, s, Fq::zero(f));
    if (r0.conditions_1_to_3()) rec.special = invariants(fr, F0, G0, s);
    rec.specializes_to_base = rec.specializes_to_base && r0.verdict() && rec.special == source;
  }

  // secondary: nonzero u in F_{q^2}
  if (q == 3) {
    const GaloisField& ext = GaloisField::get(9);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<int> dig(1, 8);
    for (int k = 0; k < 3; ++k) {
      Fq x(&ext, static_cast<GaloisField::Code>(dig(rng)));
      auto Fx = Subspace<Fq>(evaluate_in(rec.lift.F, ext, x).transpose());
      auto Gx = Subspace<Fq>(evaluate_in(rec.lift.G, ext, x).transpose());
      LiftSample smp{x.to_string(), {-1, -1}};
      if (Fx.dim() == n && Gx.dim() == s && validate(fr, Fx, Gx, s, Fq::zero(&ext)).conditions_1_to_3())
        smp.label = invariants(fr, Fx, Gx, s);
      rec.samples_agree = rec.samples_agree || smp.label == target;
      rec.samples.push_back(smp);
    }
  }
  return rec;
}

std::vector<StratumLabel> generizations(int n, int s, StratumLabel a) {
  std::vector<StratumLabel> out;
  for (const auto& b : stratum_labels(s)) {
    try {
      if (generization_lift(n, s, a, b).ok()) out.push_back(b);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BadTargets) throw;
    }
  }
  return out;
}

WitnessReport nonsmooth_witness(int n, int s, StratumLabel label, unsigned q) {
  Frame fr(n);
  if (s < 1 || s > n / 2) throw Error(ErrorKind::BadParameters, "need 1 <= s <= n/2");
  const int h = label.h, l = label.l;
  if (!admissible(label, s)) throw Error(ErrorKind::BadLabel, "label violates h <= l <= s or parity");
  if (h == l) throw Error(ErrorKind::BadLabel, "no witness on X_{h,h}: it lies in the smooth locus");
  const GaloisField* f = &GaloisField::get(q);
  auto perm = pairing_permutation(normal_form_gram(h, l, s, n, GramCase::General).T);

  // vectors in adapted coordinates: index a < n is f_{a+1}, n + a is tf_{a+1}
  auto build = [&](auto ctx, auto eps) {
    using T = decltype(eps);
    auto unit = [&](int idx) {
      Matrix<T> v(ctx, 2 * n, 1);
      v(idx, 0) = T::one(ctx);
      return v;
    };
    auto f_ = [&](int i) { return unit(i - 1); };
    auto tf = [&](int i) { return unit(n + i - 1); };
    std::vector<Matrix<T>> g, F;
    for (int i = 1; i <= s; ++i) {
      if (i == l - 1) g.push_back(tf(i) - eps * tf(n - h));
      else if (i == l) g.push_back(tf(i) + eps * tf(n - h - 1));
      else g.push_back(tf(i));
    }
    for (int i = 1; i <= h; ++i) F.push_back(f_(i));
    for (int i = 1; i <= n - h; ++i) {
      if (i == l - 1) F.push_back(tf(i) - eps * tf(n - h));
      else if (i == l) F.push_back(tf(i) + eps * tf(n - h - 1));
      else if (i == n - h - 1) F.push_back(tf(i) + eps * f_(l));
      else if (i == n - h) F.push_back(tf(i) - eps * f_(l - 1));
      else F.push_back(tf(i));
    }
    return std::make_pair(adapted_columns(perm, Matrix<T>::hstack(F)), adapted_columns(perm, Matrix<T>::hstack(g)));
  };

  WitnessReport w;
  w.n = n;
  w.s = s;
  w.label = label;
  {
    auto [Fc, Gc] = build(f, Fq::zero(f));
    w.base_F = Subspace<Fq>(Fc.transpose());
    w.base_G = Subspace<Fq>(Gc.transpose());
    w.base_label = invariants(fr, w.base_F, w.base_G, s);
  }
  {
    auto [Fc, Gc] = build(f, DualNumber::eps(f));
    w.F1 = Subspace<DualNumber>(Fc.transpose());
    w.G1 = Subspace<DualNumber>(Gc.transpose());
    w.report = validate(fr, w.F1, w.G1, s, DualNumber::zero(f));
  }
  // second order: u1 = tf_{l-1} - eps tf_{n-h}, v1 = tf_{n-h-1} + eps f_l + eps^2 f_{n-h-1}
  SeriesContext sc{f, 3, Var::eps};
  auto e = TruncatedSeries::variable(sc);
  auto vec = [&](int idx) {
    std::vector<TruncatedSeries> v(static_cast<std::size_t>(2 * n), TruncatedSeries::zero(sc));
    v[static_cast<std::size_t>(idx)] = TruncatedSeries::one(sc);
    return v;
  };
  auto axpy = [](std::vector<TruncatedSeries> x, const TruncatedSeries& c, const std::vector<TruncatedSeries>& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += c * y[i];
    return x;
  };
  // b-basis position of f_i / tf_i
  auto pf = [&](int i) { return perm[i - 1]; };
  auto ptf = [&](int i) { return n + perm[i - 1]; };
  auto u1 = axpy(vec(ptf(l - 1)), -e, vec(ptf(n - h)));
  auto v1 = axpy(axpy(vec(ptf(n - h - 1)), e, vec(pf(l))), e * e, vec(pf(n - h - 1)));
  w.obstruction = fr.pair(u1, v1, PairingKind::Symmetric);
  w.obstructed = !w.obstruction.is_zero();
  return w;
}

}  // namespace splitmod
