#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "splitmod/model_point.hpp"

namespace splitmod {

// (X, W) of size d x d with W skew and (X - X^t) W = 0, of random rank:
// W = P diag(W1, 0) P^t and X - X^t = P^-t diag(0, S2) P^-1.
std::pair<Matrix<Fq>, Matrix<Fq>> random_chart_pair(const GaloisField* f, int d, std::mt19937_64& rng);

struct ChartAgreement {
  int n{0};
  int s{0};
  unsigned q{3};
  std::uint64_t seed{1};
  long long samples{0};
  long long eps_samples{0};
  long long general_samples{0};
  long long matches{0};
  long long invalid{0};  // chart points failing validation
  std::map<StratumLabel, long long> by_label;
  std::vector<std::string> mismatches;  // first few, for the report
  bool ok() const { return samples > 0 && matches == samples && invalid == 0; }
};

// Alternates eps charts (h = eps + rk W) and general charts through a random
// stratum (h = h0 + rk Z), comparing invariants with the prediction.
ChartAgreement chart_agreement(int n, int s, long long samples, std::uint64_t seed, unsigned q = 3);

}  // namespace splitmod
