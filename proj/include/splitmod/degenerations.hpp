#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "splitmod/model_point.hpp"

namespace splitmod {

// Labels of one s, ordered by a <= b iff X_a lies in the closure of X_b,
// i.e. a.h <= b.h and a.l >= b.l.
struct ClosurePoset {
  int s{0};
  std::vector<StratumLabel> labels;

  bool leq(const StratumLabel& a, const StratumLabel& b) const;
  // Labels whose strata make up the closure of X_b.
  std::vector<StratumLabel> closure_of(const StratumLabel& b) const;
  std::vector<StratumLabel> maximal() const;  // open strata
  std::vector<StratumLabel> minimal() const;  // closed strata
  bool is_closed(const StratumLabel& b) const { return closure_of(b).size() == 1; }
  bool is_open(const StratumLabel& b) const;
};

ClosurePoset closure_poset(int s);

struct LiftSample {
  std::string u_value;  // element of F_9
  StratumLabel label;
};

struct LiftRecord {
  int n{0};
  int s{0};
  StratumLabel source;
  StratumLabel target;
  StratumLabel generic;
  StratumLabel special;
  Matrix<RationalFunction> Y2;
  Matrix<RationalFunction> Z;
  ChartColumns<RationalFunction> lift;  // generator columns over k(u)
  Subspace<Fq> base_F;                  // the point x of X_source
  Subspace<Fq> base_G;
  bool conditions_hold{false};
  bool specializes_to_base{false};
  bool generic_as_claimed{false};
  bool parameters_in_u_ku{false};
  std::vector<LiftSample> samples;  // secondary check at nonzero u in F_9
  bool samples_agree{false};

  bool ok() const { return conditions_hold && specializes_to_base && generic_as_claimed && parameters_in_u_ku; }
};

// One-parameter lift over F_3(u) from a point of X_source whose generic fiber
// lies in X_target. seed 0 gives the canonical block forms; other seeds
// conjugate them by a random invertible constant matrix.
LiftRecord generization_lift(int n, int s, StratumLabel source, StratumLabel target, std::uint64_t seed = 0,
                             unsigned q = 3);

// Labels b reachable from a by generization_lift, i.e. the labels whose
// closure contains X_a.
std::vector<StratumLabel> generizations(int n, int s, StratumLabel a);

struct WitnessReport {
  int n{0};
  int s{0};
  StratumLabel label;
  Subspace<Fq> base_F;
  Subspace<Fq> base_G;
  Subspace<DualNumber> F1;  // first-order deformation
  Subspace<DualNumber> G1;
  ValidationReport report;
  StratumLabel base_label;
  TruncatedSeries obstruction;  // (u1, v1) in k[eps]/(eps^3)
  bool obstructed{false};
};

// First-order deformation at a point of X_{h,l}, h < l, that does not extend
// to second order.
WitnessReport nonsmooth_witness(int n, int s, StratumLabel label, unsigned q = 3);

}  // namespace splitmod
