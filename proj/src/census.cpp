#include "splitmod/census.hpp"

#include <atomic>
#include <limits>
#include <mutex>
#include <random>
#include <thread>

namespace splitmod {

const char* to_string(CensusStrategy s) { return s == CensusStrategy::Exhaustive ? "exhaustive" : "chart-sampled"; }

CensusStrategy parse_strategy(const std::string& s) {
  if (s == "exhaustive") return CensusStrategy::Exhaustive;
  if (s == "chart-sampled" || s == "sampled") return CensusStrategy::ChartSampled;
  throw Error(ErrorKind::BadParameters, "unknown strategy " + s);
}

long long gaussian_binomial(int d, int k, unsigned q) {
  if (k < 0 || k > d) return 0;
  // prod (q^{d-i} - 1) / (q^{i+1} - 1), exact at each step
  long double num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    long double a = 1, b = 1;
    for (int j = 0; j < d - i; ++j) a *= q;
    for (int j = 0; j < i + 1; ++j) b *= q;
    num *= (a - 1);
    den *= (b - 1);
  }
  long double v = num / den + 0.5L;
  if (v >= static_cast<long double>(std::numeric_limits<long long>::max())) return std::numeric_limits<long long>::max();
  return static_cast<long long>(v);
}

std::vector<Matrix<Fq>> grassmannian_points(const GaloisField& f, int k, int d) {
  std::vector<Matrix<Fq>> out;
  if (k < 0 || k > d) return out;
  std::vector<int> piv(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) piv[i] = i;
  const unsigned q = f.order();
  while (true) {
    // free positions: row i, column j > piv[i], j not a pivot
    std::vector<std::pair<int, int>> free;
    std::vector<bool> is_piv(static_cast<std::size_t>(d), false);
    for (int p : piv) is_piv[p] = true;
    for (int i = 0; i < k; ++i)
      for (int j = piv[i] + 1; j < d; ++j)
        if (!is_piv[j]) free.emplace_back(i, j);
    std::vector<unsigned> digit(free.size(), 0);
    while (true) {
      Matrix<Fq> m(&f, k, d);
      for (int i = 0; i < k; ++i) m(i, piv[i]) = Fq::one(&f);
      for (std::size_t t = 0; t < free.size(); ++t)
        m(free[t].first, free[t].second) = Fq(&f, static_cast<GaloisField::Code>(digit[t]));
      out.push_back(std::move(m));
      std::size_t t = 0;
      while (t < digit.size() && ++digit[t] == q) digit[t++] = 0;
      if (t == digit.size()) break;
    }
    // next pivot set in lexicographic order
    int i = k - 1;
    while (i >= 0 && piv[i] == d - k + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

namespace {

struct BlockResult {
  std::map<StratumLabel, long long> counts;
  std::map<std::string, long long> rejected;
  long long candidates{0};
  long long valid{0};
  std::vector<CensusPoint> points;
};

void classify(const Frame& fr, int s, const Subspace<Fq>& F, const Subspace<Fq>& G, bool keep, BlockResult& out) {
  ++out.candidates;
  auto rep = validate(fr, F, G, s, Fq::zero(F.context()));
  if (!rep.verdict()) {
    ++out.rejected[rep.first_failure()];
    return;
  }
  ++out.valid;
  auto lab = invariants(fr, F, G, s);
  ++out.counts[lab];
  if (keep) out.points.push_back({F, G, lab});
}

// Embed a k x n matrix of t Lambda coordinates into the 2n-space.
Subspace<Fq> in_t_lambda(const Frame& fr, const Matrix<Fq>& low) {
  Matrix<Fq> m(low.context(), low.rows(), fr.dim());
  m.set_block(0, fr.n(), low);
  return Subspace<Fq>(m);
}

// Every valid F satisfies G + G^perp' inside F inside t^-1 G.
void exhaustive_for_g(const Frame& fr, int s, const Subspace<Fq>& G, const GaloisField& f, bool keep, long long cap,
                      BlockResult& out) {
  auto t = fr.t_matrix<Fq>(&f);
  auto A = G.sum(fr.orthogonal(G, PairingKind::Modified));
  auto B = G.preimage(t);
  const int need = fr.n() - A.dim();
  // complement of A in B: basis rows of B whose pivots are not reached by A
  Matrix<Fq> comp(&f, 0, fr.dim());
  {
    Subspace<Fq> acc = A;
    std::vector<Matrix<Fq>> rows;
    for (int i = 0; i < B.dim(); ++i) {
      auto v = B.basis().row_vec(i);
      if (acc.contains(v)) continue;
      auto row = B.basis().row(i);
      acc = acc.sum(Subspace<Fq>(row));
      rows.push_back(row);
    }
    if (!rows.empty()) comp = Matrix<Fq>::vstack(rows);
  }
  const int c = comp.rows();
  for (const auto& sel : grassmannian_points(f, need, c)) {
    if (cap > 0 && out.candidates >= cap) throw Error(ErrorKind::BudgetExceeded, "exhaustive census exceeded its candidate cap");
    Subspace<Fq> F = need == 0 ? A : A.sum(Subspace<Fq>(sel * comp));
    classify(fr, s, F, G, keep, out);
  }
}

// Random isotropic completion of S inside B.
Subspace<Fq> random_completion(const Frame& fr, const Subspace<Fq>& S, const Subspace<Fq>& B, std::mt19937_64& rng,
                               const GaloisField& f) {
  Subspace<Fq> F = S;
  std::uniform_int_distribution<int> digit(0, static_cast<int>(f.order()) - 1);
  int guard = 0;
  while (F.dim() < fr.n() && guard < 100000) {
    auto W = fr.orthogonal(F, PairingKind::Symmetric).intersect(B);
    std::vector<Fq> v(static_cast<std::size_t>(fr.dim()), Fq::zero(&f));
    for (int i = 0; i < W.dim(); ++i) {
      Fq c(&f, static_cast<GaloisField::Code>(digit(rng)));
      if (c.is_zero()) continue;
      for (int j = 0; j < fr.dim(); ++j) v[j] += c * W.basis()(i, j);
    }
    ++guard;
    if (F.contains(v) || !fr.pair(v, v, PairingKind::Symmetric).is_zero()) continue;
    Matrix<Fq> row(&f, 1, fr.dim(), v);
    F = F.sum(Subspace<Fq>(row));
  }
  return F;
}

template <class Work>
void run_blocks(int nblocks, int threads, Work&& work) {
  int nt = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  nt = std::max(1, std::min(nt, nblocks));
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex err_mu;
  for (int w = 0; w < nt; ++w)
    pool.emplace_back([&] {
      for (;;) {
        int b = next.fetch_add(1);
        if (b >= nblocks) return;
        try {
          work(b);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mu);
          if (!err) err = std::current_exception();
          next = nblocks;
          return;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace

StratumCensus census(const CensusParams& p) {
  Frame fr(p.n);
  if (p.s < 1 || p.s > p.n / 2) throw Error(ErrorKind::BadParameters, "need 1 <= s <= n/2");
  const GaloisField& f = GaloisField::get(p.q);
  StratumCensus out;
  out.params = p;
  std::vector<BlockResult> results;

  if (p.strategy == CensusStrategy::Exhaustive) {
    // crude upper bound: #G times the largest fiber
    long long ng = gaussian_binomial(p.n, p.s, p.q);
    long long fiber = 0;
    for (int l = p.s % 2; l <= p.s; l += 2) fiber = std::max(fiber, gaussian_binomial(p.s + l, l, p.q));
    long double bound = static_cast<long double>(ng) * static_cast<long double>(fiber);
    long long limit = p.budget > 0 ? std::min(p.budget, p.max_candidates) : p.max_candidates;
    if (bound > static_cast<long double>(limit))
      throw Error(ErrorKind::BudgetExceeded, "exhaustive search space exceeds the configured bound; use chart-sampled");
    auto gs = grassmannian_points(f, p.s, p.n);
    const int block = 16;
    const int nblocks = static_cast<int>((gs.size() + block - 1) / block);
    results.resize(static_cast<std::size_t>(nblocks));
    run_blocks(nblocks, p.threads, [&](int b) {
      for (std::size_t i = static_cast<std::size_t>(b) * block; i < gs.size() && i < static_cast<std::size_t>(b + 1) * block; ++i)
        exhaustive_for_g(fr, p.s, in_t_lambda(fr, gs[i]), f, p.keep_points, 0, results[b]);
    });
  } else {
    const long long samples = p.budget > 0 ? p.budget : 10000;
    const long long block = 256;
    const int nblocks = static_cast<int>((samples + block - 1) / block);
    results.resize(static_cast<std::size_t>(nblocks));
    run_blocks(nblocks, p.threads, [&](int b) {
      std::seed_seq seq{static_cast<std::uint32_t>(p.seed), static_cast<std::uint32_t>(p.seed >> 32),
                        static_cast<std::uint32_t>(b), 0x5eedu};
      std::mt19937_64 rng(seq);
      std::uniform_int_distribution<int> digit(0, static_cast<int>(f.order()) - 1);
      auto t = fr.t_matrix<Fq>(&f);
      const long long lo = b * block, hi = std::min(samples, lo + block);
      for (long long i = lo; i < hi; ++i) {
        Matrix<Fq> low(&f, p.s, p.n);
        Subspace<Fq> G;
        do {
          for (int r = 0; r < p.s; ++r)
            for (int c = 0; c < p.n; ++c) low(r, c) = Fq(&f, static_cast<GaloisField::Code>(digit(rng)));
          G = in_t_lambda(fr, low);
        } while (G.dim() < p.s);
        auto S = G.sum(fr.orthogonal(G, PairingKind::Modified));
        auto F = random_completion(fr, S, G.preimage(t), rng, f);
        classify(fr, p.s, F, G, p.keep_points, results[b]);
      }
    });
  }
  for (auto& r : results) {
    for (auto& [k, v] : r.counts) out.counts[k] += v;
    for (auto& [k, v] : r.rejected) out.rejected[k] += v;
    out.candidates += r.candidates;
    out.valid += r.valid;
    for (auto& pt : r.points) out.points.push_back(std::move(pt));
  }
  return out;
}

}  // namespace splitmod
