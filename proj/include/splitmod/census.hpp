#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "splitmod/model_point.hpp"

namespace splitmod {

enum class CensusStrategy { Exhaustive, ChartSampled };
const char* to_string(CensusStrategy s);
CensusStrategy parse_strategy(const std::string& s);

struct CensusParams {
  int n{4};
  int s{2};
  unsigned q{3};
  CensusStrategy strategy{CensusStrategy::Exhaustive};
  long long budget{0};  // exhaustive: candidate cap (0 = default bound); sampled: number of samples
  std::uint64_t seed{1};
  int threads{0};           // 0 = hardware concurrency
  bool keep_points{false};  // retain every valid point with its label
  long long max_candidates{100000000};
};

struct CensusPoint {
  Subspace<Fq> F;
  Subspace<Fq> G;
  StratumLabel label;
};

struct StratumCensus {
  CensusParams params;
  std::map<StratumLabel, long long> counts;
  std::map<std::string, long long> rejected;
  long long candidates{0};
  long long valid{0};
  std::vector<CensusPoint> points;
};

// All k-dimensional subspaces of F_q^d, as full-rank RREF k x d matrices.
std::vector<Matrix<Fq>> grassmannian_points(const GaloisField& f, int k, int d);
// Number of k-dimensional subspaces of F_q^d.
long long gaussian_binomial(int d, int k, unsigned q);

StratumCensus census(const CensusParams& p);

}  // namespace splitmod
