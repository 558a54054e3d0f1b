#include "splitmod/model_point.hpp"

namespace splitmod {

int stratum_dimension(int r, int s, int h, int l) {
  if (s < 0 || r < s || h < 0 || h > l || l > s) throw Error(ErrorKind::BadParameters, "need 0 <= h <= l <= s <= r");
  if ((h - s) % 2 != 0 || (l - s) % 2 != 0) throw Error(ErrorKind::BadParameters, "need h = l = s mod 2");
  const int d = l - h;
  return r * s - d * (d - 1) / 2;
}

std::vector<StratumLabel> stratum_labels(int s) {
  std::vector<StratumLabel> out;
  for (int h = s % 2; h <= s; h += 2)
    for (int l = h; l <= s; l += 2) out.push_back({h, l});
  return out;
}

namespace {

using DMatrix = Matrix<DualNumber>;

// v minus its pivot-coordinate combination of rows of b (rows canonical at pivots).
std::vector<DualNumber> reduce_by(const DMatrix& b, const std::vector<int>& pivots, std::vector<DualNumber> v) {
  for (int i = 0; i < b.rows(); ++i) {
    DualNumber c = v[static_cast<std::size_t>(pivots[i])];
    if (c.is_zero()) continue;
    for (int j = 0; j < b.cols(); ++j)
      if (!b(i, j).is_zero()) v[j] -= c * b(i, j);
  }
  return v;
}

std::vector<int> non_pivots(int d, const std::vector<int>& pivots) {
  std::vector<bool> is(static_cast<std::size_t>(d), false);
  for (int p : pivots) is[p] = true;
  std::vector<int> out;
  for (int j = 0; j < d; ++j)
    if (!is[j]) out.push_back(j);
  return out;
}

}  // namespace

int tangent_report(const Frame& fr, const Subspace<Fq>& F, const Subspace<Fq>& G, int s) {
  const auto* f = F.context();
  auto rep = validate(fr, F, G, s, Fq::zero(f));
  if (!rep.conditions_1_to_3()) throw Error(ErrorKind::InvalidPoint, "tangent_report needs a point passing (1)-(3)");
  const int d = fr.dim(), n = fr.n();
  auto lift = [&](const Matrix<Fq>& m) { return m.map_to<DualNumber>(f, [](const Fq& x) { return DualNumber(x, Fq::zero(x.context())); }); };
  const DMatrix Fb = lift(F.basis()), Gb = lift(G.basis());
  const DMatrix S = fr.gram_sym().to<DualNumber>(f);
  const DMatrix t = fr.t_matrix<DualNumber>(f);
  const auto cF = non_pivots(d, F.pivots()), cG = non_pivots(d, G.pivots());
  const int nparams = n * static_cast<int>(cF.size()) + s * static_cast<int>(cG.size());
  const DualNumber eps = DualNumber::eps(f);

  std::vector<std::vector<Fq>> columns;
  for (int k = 0; k < nparams; ++k) {
    DMatrix Fp = Fb, Gp = Gb;
    if (k < n * static_cast<int>(cF.size())) {
      int i = k / static_cast<int>(cF.size()), j = k % static_cast<int>(cF.size());
      Fp(i, cF[j]) += eps;
    } else {
      int kk = k - n * static_cast<int>(cF.size());
      int i = kk / static_cast<int>(cG.size()), j = kk % static_cast<int>(cG.size());
      Gp(i, cG[j]) += eps;
    }
    std::vector<Fq> res;
    auto push = [&](const std::vector<DualNumber>& v) {
      for (const auto& x : v) res.push_back(x.dual());
    };
    for (int i = 0; i < Gp.rows(); ++i) push(reduce_by(Fp, F.pivots(), Gp.row_vec(i)));
    DMatrix iso = Fp * S * Fp.transpose();
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) res.push_back(iso(i, j).dual());
    DMatrix tF = (t * Fp.transpose()).transpose();
    for (int i = 0; i < tF.rows(); ++i) push(reduce_by(Gp, G.pivots(), tF.row_vec(i)));
    DMatrix tG = t * Gp.transpose();
    for (const auto& x : tG.data()) res.push_back(x.dual());
    columns.push_back(std::move(res));
  }
  if (nparams == 0) return 0;
  Matrix<Fq> L(f, static_cast<int>(columns[0].size()), nparams);
  for (int k = 0; k < nparams; ++k)
    for (int i = 0; i < L.rows(); ++i) L(i, k) = columns[k][i];
  return nparams - rank(L);
}

}  // namespace splitmod
