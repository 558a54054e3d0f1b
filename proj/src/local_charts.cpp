#include "splitmod/local_charts.hpp"

#include <algorithm>
#include <random>

namespace splitmod {

namespace {

std::string nm(const std::string& base, int i, int j) { return base + "_" + std::to_string(i + 1) + "_" + std::to_string(j + 1); }

struct Names {
  std::vector<std::string> v;
  void matrix(const std::string& base, int r, int c) {
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) v.push_back(nm(base, i, j));
  }
  void upper(const std::string& base, int d, bool diag) {
    for (int i = 0; i < d; ++i)
      for (int j = diag ? i : i + 1; j < d; ++j) v.push_back(nm(base, i, j));
  }
};

using Ring = std::shared_ptr<const PolyRing>;

MultiPoly var(const Ring& R, const std::string& name) { return MultiPoly::var(R, name); }

PolyMatrix full_matrix(const Ring& R, const std::string& base, int r, int c) {
  PolyMatrix m(R, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = var(R, nm(base, i, j));
  return m;
}

PolyMatrix skew_matrix(const Ring& R, const std::string& base, int d) {
  PolyMatrix m(R, d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      m(i, j) = var(R, nm(base, i, j));
      m(j, i) = -m(i, j);
    }
  return m;
}

PolyMatrix sym_matrix(const Ring& R, const std::string& base, int d) {
  PolyMatrix m(R, d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      m(i, j) = var(R, nm(base, i, j));
      m(j, i) = m(i, j);
    }
  return m;
}

PolyMatrix two_pi_identity(const Ring& R, int d) {
  PolyMatrix m(R, d, d);
  auto tp = MultiPoly::from_int(R, 2) * var(R, "pi");
  for (int i = 0; i < d; ++i) m(i, i) = tp;
  return m;
}

void add_all(IdealPresentation& P, const PolyMatrix& m, const std::string& label, bool upper_only = false) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = upper_only ? i : 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      P.generators.push_back(m(i, j));
      P.labels.push_back(label + "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]");
    }
}

PolyMatrix K_of(const PolyMatrix& X, const PolyMatrix& Y) { return X.transpose() * Y - Y.transpose() * X; }

// Intermediate ring of the chain: (W + W^t, T + T^t, (T + X^t Y - Y^t X) W - 2 pi I)
// on X, Y, [S symmetric,] T, W with full T and W.
IdealPresentation intermediate_presentation(int sp, int p, bool with_s, unsigned q) {
  Names n;
  n.matrix("x", p, sp);
  n.matrix("y", p, sp);
  if (with_s) n.upper("s", sp, true);
  n.matrix("t", sp, sp);
  n.matrix("w", sp, sp);
  n.v.push_back("pi");
  auto R = PolyRing::make(GaloisField::get(q), n.v);
  IdealPresentation P;
  P.name = with_s ? "intermediate (X,Y,S,T,W)" : "intermediate (X,Y,T,W)";
  P.ring = R;
  P.sp = sp;
  P.s = sp;
  P.r = sp + 2 * p;
  auto X = full_matrix(R, "x", p, sp), Y = full_matrix(R, "y", p, sp);
  auto T = full_matrix(R, "t", sp, sp), W = full_matrix(R, "w", sp, sp);
  add_all(P, W + W.transpose(), "W+W^t", true);
  add_all(P, T + T.transpose(), "T+T^t", true);
  add_all(P, (T + K_of(X, Y)) * W - two_pi_identity(R, sp), "(T+K)W-2pi");
  P.blocks = {{"X", X}, {"Y", Y}, {"T", T}, {"W", W}};
  if (with_s) P.blocks.emplace("S", sym_matrix(R, "s", sp));
  return P;
}

}  // namespace

IdealPresentation IdealPresentation::at_pi_zero() const {
  IdealPresentation out = *this;
  out.name = name + " at pi = 0";
  std::vector<MultiPoly> images;
  for (const auto& v : ring->names())
    images.push_back(v == "pi" ? MultiPoly::zero(ring) : MultiPoly::var(ring, v));
  out.generators.clear();
  out.labels.clear();
  for (std::size_t i = 0; i < generators.size(); ++i) {
    auto g = generators[i].substitute(images);
    if (g.is_zero()) continue;
    out.generators.push_back(g);
    out.labels.push_back(labels[i]);
  }
  return out;
}

IdealPresentation local_ring_presentation(int sp, int p, unsigned q) {
  if (sp < 0 || p < 0) throw Error(ErrorKind::BadParameters, "negative block size");
  Names n;
  n.matrix("x", p, sp);
  n.matrix("y", p, sp);
  n.matrix("z", sp, sp);
  n.matrix("w", sp, sp);
  n.v.push_back("pi");
  auto R = PolyRing::make(GaloisField::get(q), n.v);
  IdealPresentation P;
  P.name = "local ring (X,Y,Z,W)";
  P.ring = R;
  P.sp = sp;
  P.s = sp;
  P.r = sp + 2 * p;
  auto X = full_matrix(R, "x", p, sp), Y = full_matrix(R, "y", p, sp);
  auto Z = full_matrix(R, "z", sp, sp), W = full_matrix(R, "w", sp, sp);
  auto Q = Z - Z.transpose() + K_of(X, Y);
  add_all(P, W + W.transpose(), "W+W^t", true);
  add_all(P, Q * W - two_pi_identity(R, sp), "QW-2pi");
  P.blocks = {{"X", X}, {"Y", Y}, {"Z", Z}, {"W", W}, {"Q", Q}};
  return P;
}

IdealPresentation isotropy_relations(int s, int r, unsigned q) {
  if (s < 1) throw Error(ErrorKind::BadParameters, "need s >= 1");
  if (r < 0) r = s + 2;
  if (r < s || (r - s) % 2 != 0) throw Error(ErrorKind::BadParameters, "need r >= s and r = s mod 2");
  const int p = (r - s) / 2, eps = s % 2, sp = s - eps;
  if (eps == 0) {
    auto P = local_ring_presentation(s, p, q);
    P.name = "isotropy relations (even s)";
    P.r = r;
    P.eliminated = {"A = I_s", "B = W"};
    P.notes.push_back("A^t B + B^t A = 0 reads W + W^t = 0; Q B = 2 pi A reads Q W = 2 pi I");
    return P;
  }
  Names n;
  n.matrix("x", p, s);
  n.matrix("y", p, s);
  n.matrix("z", s, s);
  n.matrix("v", sp, 1);
  n.matrix("w", sp, sp);
  n.v.push_back("pi");
  auto R = PolyRing::make(GaloisField::get(q), n.v);
  IdealPresentation P;
  P.name = "isotropy relations (odd s)";
  P.ring = R;
  P.s = s;
  P.r = r;
  P.sp = sp;
  P.eps = 1;
  P.a = r + s - 1;
  P.free_variables = {"z = z_1_1", "Z2 = z_i_1 (i > 1)", "X1 = x_i_1", "Y1 = y_i_1", "B0 = v_i_1"};
  P.eliminated = {"a0 = 0", "A1 = -B0^t", "Z1 = z_1_j (j > 1), solved from Q0 = -Q1 B0"};
  auto X = full_matrix(R, "x", p, s), Y = full_matrix(R, "y", p, s), Z = full_matrix(R, "z", s, s);
  auto B0 = full_matrix(R, "v", sp, 1), B1 = full_matrix(R, "w", sp, sp);
  auto Q = Z - Z.transpose() + K_of(X, Y);
  auto Q1 = Q.block(1, 1, sp, sp), Q0 = Q.block(1, 0, sp, 1);
  add_all(P, B1 + B1.transpose(), "B1+B1^t", true);
  add_all(P, Q1 * B1 - two_pi_identity(R, sp), "Q1B1-2pi");
  add_all(P, Q0 + Q1 * B0, "Q0+Q1B0");
  P.blocks = {{"X", X}, {"Y", Y}, {"Z", Z}, {"B0", B0}, {"B1", B1}, {"Q", Q}};
  return P;
}

IdealPresentation reduced_presentation(int s, int r, SkewMode mode, unsigned q) {
  if (s < 1) throw Error(ErrorKind::BadParameters, "need s >= 1");
  if (r < 0) r = s + 2;
  if (r < s || (r - s) % 2 != 0) throw Error(ErrorKind::BadParameters, "need r >= s and r = s mod 2");
  const int p = (r - s) / 2, eps = s % 2, sp = s - eps;
  Names n;
  n.matrix("x", p, sp);
  n.matrix("y", p, sp);
  if (mode == SkewMode::FreeEntries) {
    n.upper("t", sp, false);
    n.upper("w", sp, false);
  } else {
    n.matrix("t", sp, sp);
    n.matrix("w", sp, sp);
  }
  n.v.push_back("pi");
  auto R = PolyRing::make(GaloisField::get(q), n.v);
  IdealPresentation P;
  P.name = "reduced (X,Y,T,W)";
  P.ring = R;
  P.s = s;
  P.r = r;
  P.sp = sp;
  P.eps = eps;
  P.a = eps ? r + s - 1 : 0;
  if (eps) P.free_variables = {"z", "Z2", "X1", "Y1", "B0"};
  P.notes.push_back("free affine factor of dimension a + s'(s'+1)/2 split off (S symmetric)");
  auto X = full_matrix(R, "x", p, sp), Y = full_matrix(R, "y", p, sp);
  PolyMatrix T(R, sp, sp), W(R, sp, sp);
  if (mode == SkewMode::FreeEntries) {
    T = skew_matrix(R, "t", sp);
    W = skew_matrix(R, "w", sp);
    P.notes.push_back("T and W parametrized by entries above the diagonal; T + T^t and W + W^t vanish identically");
  } else {
    T = full_matrix(R, "t", sp, sp);
    W = full_matrix(R, "w", sp, sp);
    add_all(P, W + W.transpose(), "W+W^t", true);
    add_all(P, T + T.transpose(), "T+T^t", true);
  }
  add_all(P, T * W - two_pi_identity(R, sp), "TW-2pi");
  P.blocks = {{"X", X}, {"Y", Y}, {"T", T}, {"W", W}};
  return P;
}

namespace {

template <class T>
Matrix<T> flat_blocks(const Matrix<T>& T0, const Matrix<T>& W0, const T& pi, bool want_T) {
  const auto ctx = T0.context();
  const int a = T0.rows(), b = W0.rows();
  const int d = 2 * a + 2 * b;
  const T two_pi = T::from_int(ctx, 2) * pi;
  Matrix<T> m(ctx, d, d);
  auto Ti = inverse(T0), Wi = inverse(W0);
  if (want_T) {
    m.set_block(0, a + 2 * b, T0);
    m.set_block(a, a + b, Matrix<T>(-(two_pi * Wi.transpose())));
    m.set_block(a + b, a, Matrix<T>(two_pi * Wi));
    m.set_block(a + 2 * b, 0, Matrix<T>(-T0.transpose()));
  } else {
    m.set_block(0, a + 2 * b, Matrix<T>(-(two_pi * Ti.transpose())));
    m.set_block(a, a + b, W0);
    m.set_block(a + b, a, Matrix<T>(-W0.transpose()));
    m.set_block(a + 2 * b, 0, Matrix<T>(two_pi * Ti));
  }
  return m;
}

}  // namespace

FlatLift flat_lift(const Matrix<RationalFunction>& T0, const Matrix<RationalFunction>& W0) {
  const auto ctx = T0.context();
  if (!T0.is_square() || !W0.is_square()) throw Error(ErrorKind::BadParameters, "T0 and W0 must be square");
  const auto pi = RationalFunction::variable(ctx);
  FlatLift out;
  out.T = flat_blocks(T0, W0, pi, true);
  out.W = flat_blocks(T0, W0, pi, false);
  const int d = out.T.rows();
  out.T_skew = out.T == -out.T.transpose();
  out.W_skew = out.W == -out.W.transpose();
  auto I = Matrix<RationalFunction>::identity(ctx, d);
  out.product_is_2pi = out.T * out.W == (RationalFunction::from_int(ctx, 2) * pi) * I;
  try {
    const Fq zero = Fq::zero(ctx.field);
    auto at0 = [&](const Matrix<RationalFunction>& m) {
      return m.map_to<Fq>(ctx.field, [&](const RationalFunction& x) { return x.eval(zero); });
    };
    out.special_product_zero = (at0(out.T) * at0(out.W)).is_zero();
  } catch (const Error&) {
    out.special_product_zero = false;  // pole at pi = 0
  }
  return out;
}

FlatLift flat_lift(const Matrix<Fq>& T0, const Matrix<Fq>& W0) {
  const auto* f = T0.context();
  auto ctx = RatContext{f, Var::pi};
  auto lift = [&](const Matrix<Fq>& m) {
    return m.map_to<RationalFunction>(ctx, [&](const Fq& x) { return RationalFunction::constant(ctx, x); });
  };
  return flat_lift(lift(T0), lift(W0));
}

bool MapCheck::ok() const {
  return std::all_of(generators.begin(), generators.end(), [](const GeneratorVerdict& g) { return g.ok(); });
}

bool SubstitutionReport::ok() const {
  return !maps.empty() && std::all_of(maps.begin(), maps.end(), [](const MapCheck& m) { return m.ok(); });
}

namespace {

// f in the F_q-span of gens.
bool in_span(const MultiPoly& f, const std::vector<MultiPoly>& gens) {
  std::vector<Monomial> mons;
  auto note = [&](const MultiPoly& p) {
    for (const auto& t : p.terms())
      if (std::find(mons.begin(), mons.end(), t.first) == mons.end()) mons.push_back(t.first);
  };
  note(f);
  for (const auto& g : gens) note(g);
  const auto* F = f.context()->field();
  auto row = [&](const MultiPoly& p, Matrix<Fq>& m, int r) {
    for (const auto& t : p.terms()) {
      int c = static_cast<int>(std::find(mons.begin(), mons.end(), t.first) - mons.begin());
      m(r, c) = Fq(F, t.second);
    }
  };
  const int k = static_cast<int>(gens.size()), w = static_cast<int>(mons.size());
  Matrix<Fq> a(F, k, w), b(F, k + 1, w);
  for (int i = 0; i < k; ++i) {
    row(gens[i], a, i);
    row(gens[i], b, i);
  }
  row(f, b, k);
  return rank(a) == rank(b);
}

struct Target {
  const IdealPresentation* P;
  std::optional<GroebnerBasis> gb;
};

MapCheck run_map(const std::string& name, const IdealPresentation& src, Target& dst, const std::vector<MultiPoly>& images) {
  MapCheck mc;
  mc.name = name;
  mc.source = src.name;
  mc.target = dst.P->name;
  for (std::size_t i = 0; i < src.generators.size(); ++i) {
    GeneratorVerdict v;
    v.label = src.labels[i];
    auto img = src.generators[i].substitute(images);
    v.image = img.to_string();
    if (img.is_zero()) {
      v.verdict = "zero";
    } else if (in_span(img, dst.P->generators)) {
      v.verdict = "span";
    } else {
      if (!dst.gb) dst.gb = groebner(dst.P->generators);
      v.verdict = ideal_contains(*dst.gb, img) ? "ideal" : "fail";
    }
    mc.generators.push_back(std::move(v));
  }
  return mc;
}

std::vector<MultiPoly> identity_images(const Ring& src, const Ring& dst) {
  std::vector<MultiPoly> out;
  for (const auto& v : src->names())
    out.push_back(dst->index_of(v) >= 0 ? MultiPoly::var(dst, v) : MultiPoly::zero(dst));
  return out;
}

void set_image(std::vector<MultiPoly>& images, const Ring& src, const std::string& name, MultiPoly img) {
  int k = src->index_of(name);
  if (k < 0) throw Error(ErrorKind::BadParameters, "no variable " + name);
  images[static_cast<std::size_t>(k)] = std::move(img);
}

}  // namespace

SubstitutionReport substitution_check(int sp, int p, bool inverses, unsigned q) {
  if (sp < 1 || sp > 4) throw Error(ErrorKind::BudgetExceeded, "substitution_check supports 1 <= s' <= 4");
  SubstitutionReport rep;
  rep.sp = sp;
  rep.p = p;
  auto P0 = local_ring_presentation(sp, p, q);
  auto P1 = intermediate_presentation(sp, p, true, q);
  auto P1b = intermediate_presentation(sp, p, false, q);
  auto P2 = reduced_presentation(sp, sp + 2 * p, SkewMode::FullEntries, q);
  Target t0{&P0, {}}, t1{&P1, {}}, t1b{&P1b, {}}, t2{&P2, {}};
  const auto& R0 = P0.ring;
  const auto& R1 = P1.ring;
  const auto& R1b = P1b.ring;
  const auto& R2 = P2.ring;

  // T -> Z - Z^t, S -> Z + Z^t
  {
    auto img = identity_images(R1, R0);
    for (int i = 0; i < sp; ++i)
      for (int j = 0; j < sp; ++j) {
        set_image(img, R1, nm("t", i, j), var(R0, nm("z", i, j)) - var(R0, nm("z", j, i)));
        if (i <= j) set_image(img, R1, nm("s", i, j), var(R0, nm("z", i, j)) + var(R0, nm("z", j, i)));
      }
    rep.maps.push_back(run_map("T -> Z - Z^t, S -> Z + Z^t", P1, t0, img));
  }
  // T -> T - (X^t Y - Y^t X)
  {
    auto img = identity_images(R1b, R2);
    auto K = K_of(P2.blocks.at("X"), P2.blocks.at("Y"));
    for (int i = 0; i < sp; ++i)
      for (int j = 0; j < sp; ++j) set_image(img, R1b, nm("t", i, j), var(R2, nm("t", i, j)) - K(i, j));
    rep.maps.push_back(run_map("T -> T - (X^t Y - Y^t X)", P1b, t2, img));
  }
  if (inverses) {
    auto img = identity_images(R0, R1);
    const auto half = Fq::from_int(R1->field(), 2).inverse();
    for (int i = 0; i < sp; ++i)
      for (int j = 0; j < sp; ++j)
        set_image(img, R0, nm("z", i, j),
                  (var(R1, nm("s", std::min(i, j), std::max(i, j))) + var(R1, nm("t", i, j))).scaled(half));
    rep.maps.push_back(run_map("Z -> (S + T)/2", P0, t1, img));

    auto img2 = identity_images(R2, R1b);
    auto K = K_of(P1b.blocks.at("X"), P1b.blocks.at("Y"));
    for (int i = 0; i < sp; ++i)
      for (int j = 0; j < sp; ++j) set_image(img2, R2, nm("t", i, j), var(R1b, nm("t", i, j)) + K(i, j));
    rep.maps.push_back(run_map("T -> T + (X^t Y - Y^t X)", P2, t1b, img2));
  }
  return rep;
}

bool squarefree_by_derivatives(const MultiPoly& f) {
  if (f.is_zero()) return false;
  const auto& R = f.context();
  const auto* F = R->field();
  std::mt19937_64 rng(0x5f5fULL);
  std::uniform_int_distribution<int> dig(0, static_cast<int>(F->order()) - 1);
  for (int v = 0; v < R->nvars(); ++v) {
    const int d = f.degree_in(v);
    if (d == 0) continue;
    int best = d;
    for (int trial = 0; trial < 64 && best > 0; ++trial) {
      std::vector<Fq> pt;
      for (int i = 0; i < R->nvars(); ++i) pt.push_back(Fq(F, static_cast<GaloisField::Code>(dig(rng))));
      auto u = f.specialize_to_univariate(v, pt);
      if (u.degree() != d) continue;
      best = std::min(best, UPoly::gcd(u, u.derivative()).degree());
    }
    if (best != 0) return false;
  }
  return true;
}

bool ReducednessReport::ok() const {
  bool mem = std::all_of(membership.begin(), membership.end(), [](const auto& kv) { return kv.second; });
  if (m == 2) return principal && generator_squarefree && initial_ideal_squarefree && mem;
  return initial_ideal_squarefree && mem;
}

ReducednessReport reducedness_check(int m, unsigned q, const GroebnerOptions& opt) {
  if (m < 2 || m % 2 != 0) throw Error(ErrorKind::BadParameters, "m must be even and >= 2");
  Names n;
  n.upper("t", m, false);
  n.upper("w", m, false);
  auto R = PolyRing::make(GaloisField::get(q), n.v);
  auto T = skew_matrix(R, "t", m), W = skew_matrix(R, "w", m);
  auto TW = T * W;
  std::vector<MultiPoly> gens;
  for (const auto& x : TW.data())
    if (!x.is_zero()) gens.push_back(x);
  ReducednessReport rep;
  rep.m = m;
  rep.ideal = "(T + T^t, W + W^t, T W), T and W skew " + std::to_string(m) + "x" + std::to_string(m);
  rep.gb = groebner(gens, opt);
  rep.principal = rep.gb.is_principal();
  rep.generator = rep.gb.polys.empty() ? "0" : rep.gb.polys.front().to_string();
  rep.generator_squarefree = std::all_of(rep.gb.polys.begin(), rep.gb.polys.end(),
                                         [](const MultiPoly& p) { return squarefree_by_derivatives(p); });
  rep.initial_ideal_squarefree = squarefree_initial_ideal(rep.gb);
  if (m == 2) {
    auto t = var(R, "t_1_2"), w = var(R, "w_1_2");
    auto tw = t * w;
    rep.membership["(tw)^2 in I"] = ideal_contains(rep.gb, tw * tw);
    rep.membership["tw in I"] = ideal_contains(rep.gb, tw);
    rep.membership["t not in I"] = !ideal_contains(rep.gb, t);
    rep.membership["w not in I"] = !ideal_contains(rep.gb, w);
  } else {
    auto pf = [&](const std::string& b) {
      if (m != 4) return MultiPoly::zero(R);
      auto e = [&](int i, int j) { return var(R, nm(b, i, j)); };
      return e(0, 1) * e(2, 3) - e(0, 2) * e(1, 3) + e(0, 3) * e(1, 2);
    };
    if (m == 4) {
      auto pp = pf("t") * pf("w");
      rep.membership["(Pf T Pf W)^2 in I"] = ideal_contains(rep.gb, pp * pp);
      rep.membership["Pf T Pf W in I"] = ideal_contains(rep.gb, pp);
    }
    rep.membership["t_1_2 not in I"] = !ideal_contains(rep.gb, var(R, "t_1_2"));
  }
  return rep;
}

}  // namespace splitmod

namespace splitmod {

FlatLiftTrials flat_lift_trials(int a, int b, int trials, std::uint64_t seed, unsigned q) {
  if (a < 0 || b < 0 || a + b == 0) throw Error(ErrorKind::BadParameters, "need a, b >= 0 and a + b > 0");
  const auto ctx = rat_context(q, Var::pi);
  const auto* F = ctx.field;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(a),
                    static_cast<std::uint32_t>(b), 0xf1a7u};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<int> dig(0, static_cast<int>(q) - 1);
  auto poly = [&](int deg, bool nonzero) {
    for (;;) {
      std::vector<GaloisField::Code> c;
      for (int i = 0; i <= deg; ++i) c.push_back(static_cast<GaloisField::Code>(dig(rng)));
      UPoly p(F, c);
      if (!nonzero || !p.is_zero()) return p;
    }
  };
  auto random_invertible = [&](int d) {
    for (;;) {
      Matrix<RationalFunction> m(ctx, d, d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = RationalFunction(ctx, poly(2, false), poly(1, true));
      if (rank(m) == d) return m;
    }
  };
  FlatLiftTrials out;
  out.a = a;
  out.b = b;
  out.q = q;
  for (int t = 0; t < trials; ++t) {
    auto T0 = random_invertible(a), W0 = random_invertible(b);
    auto lift = flat_lift(T0, W0);
    ++out.trials;
    if (lift.T_skew && lift.W_skew && lift.product_is_2pi) {
      ++out.passed;
    } else if (out.failures.size() < 5) {
      out.failures.push_back("T0 = " + T0.to_string() + ", W0 = " + W0.to_string());
    }
  }
  return out;
}

}  // namespace splitmod
