#include "splitmod/chart_stats.hpp"

namespace splitmod {

namespace {

Fq random_fq(const GaloisField* f, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, static_cast<int>(f->order()) - 1);
  return {f, static_cast<GaloisField::Code>(d(rng))};
}

Matrix<Fq> random_skew(const GaloisField* f, int n, std::mt19937_64& rng) {
  Matrix<Fq> m(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      m(i, j) = random_fq(f, rng);
      m(j, i) = -m(i, j);
    }
  return m;
}

Matrix<Fq> random_invertible(const GaloisField* f, int n, std::mt19937_64& rng) {
  for (;;) {
    Matrix<Fq> m(f, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = random_fq(f, rng);
    if (rank(m) == n) return m;
  }
}

}  // namespace

std::pair<Matrix<Fq>, Matrix<Fq>> random_chart_pair(const GaloisField* f, int d, std::mt19937_64& rng) {
  if (d == 0) return {Matrix<Fq>(f, 0, 0), Matrix<Fq>(f, 0, 0)};
  const int k = std::uniform_int_distribution<int>(0, d)(rng);
  auto P = random_invertible(f, d, rng);
  auto Pinv = inverse(P);
  Matrix<Fq> W1(f, d, d), S2(f, d, d);
  W1.set_block(0, 0, random_skew(f, k, rng));
  S2.set_block(k, k, random_skew(f, d - k, rng));
  auto W = P * W1 * P.transpose();
  auto S = Pinv.transpose() * S2 * Pinv;
  Matrix<Fq> X(f, d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j <= i; ++j) {
      Fq sym = random_fq(f, rng);
      X(i, j) += sym;
      if (i != j) {
        X(j, i) += sym;
        X(i, j) += S(i, j);
      }
    }
  return {X, W};
}

ChartAgreement chart_agreement(int n, int s, long long samples, std::uint64_t seed, unsigned q) {
  Frame fr(n);
  if (s < 1 || 2 * s > n) throw Error(ErrorKind::BadParameters, "need 1 <= s <= n/2");
  const auto* f = &GaloisField::get(q);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 0xc4a7u};
  std::mt19937_64 rng(seq);
  ChartAgreement out;
  out.n = n;
  out.s = s;
  out.q = q;
  out.seed = seed;
  const auto labels = stratum_labels(s);
  for (long long t = 0; t < samples; ++t) {
    ModelPoint<Fq> pt;
    StratumLabel want;
    if (t % 2 == 0) {
      auto [X, W] = random_chart_pair(f, s - s % 2, rng);
      pt = chart_point_eps(fr, s, X, W);
      want = chart_eps_prediction(s, X, W);
      ++out.eps_samples;
    } else {
      auto lab0 = labels[std::uniform_int_distribution<std::size_t>(0, labels.size() - 1)(rng)];
      auto [Y2, Z] = random_chart_pair(f, lab0.l - lab0.h, rng);
      pt = chart_point_general(fr, s, lab0.h, lab0.l, Y2, Z);
      want = chart_general_prediction(lab0.h, Y2, Z);
      ++out.general_samples;
    }
    ++out.samples;
    if (!validate(pt).verdict()) {
      ++out.invalid;
      continue;
    }
    auto got = invariants(pt);
    ++out.by_label[got];
    if (got == want) {
      ++out.matches;
    } else if (out.mismatches.size() < 10) {
      out.mismatches.push_back("sample " + std::to_string(t) + ": predicted " + want.to_string() + ", got " + got.to_string());
    }
  }
  return out;
}

}  // namespace splitmod
