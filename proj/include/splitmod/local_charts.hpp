#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "splitmod/groebner.hpp"
#include "splitmod/linalg.hpp"
#include "splitmod/rational_function.hpp"

namespace splitmod {

using PolyMatrix = Matrix<MultiPoly>;

// A quotient of a polynomial ring by named generators, with the symbolic
// matrices it was built from.
struct IdealPresentation {
  std::string name;
  std::shared_ptr<const PolyRing> ring;
  std::vector<MultiPoly> generators;
  std::vector<std::string> labels;  // one per generator, e.g. "QW-2pi[1,2]"
  std::map<std::string, PolyMatrix> blocks;
  int s{0};
  int r{0};
  int sp{0};  // s' = s - eps
  int eps{0};
  int a{0};   // free variables split off in the odd case
  std::vector<std::string> free_variables;  // descriptions of the a free variables
  std::vector<std::string> eliminated;
  std::vector<std::string> notes;

  // Generators with pi = 0, zero polynomials dropped.
  IdealPresentation at_pi_zero() const;
  std::vector<std::string> variables() const { return ring->names(); }
};

enum class SkewMode { FreeEntries, FullEntries };

// Relations of the local chart at the worst point: A^t B + B^t A = 0 and
// Q B = 2 pi A with Q = Z - Z^t + X^t Y - Y^t X. r < 0 means r = s + 2.
IdealPresentation isotropy_relations(int s, int r = -1, unsigned q = 3);

// (W + W^t, (Z - Z^t + X^t Y - Y^t X) W - 2 pi I) with X, Y of size p x sp.
IdealPresentation local_ring_presentation(int sp, int p, unsigned q = 3);

// (W + W^t, T + T^t, T W - 2 pi I) on X, Y, T, W. FreeEntries parametrizes T
// and W by their entries above the diagonal (the skew relations then hold
// identically and are not listed). r < 0 means r = s + 2.
IdealPresentation reduced_presentation(int s, int r = -1, SkewMode mode = SkewMode::FreeEntries, unsigned q = 3);

struct FlatLift {
  Matrix<RationalFunction> T;
  Matrix<RationalFunction> W;
  bool T_skew{false};
  bool W_skew{false};
  bool product_is_2pi{false};
  bool special_product_zero{false};  // T W = 0 at pi = 0
  bool ok() const { return T_skew && W_skew && product_is_2pi && special_product_zero; }
};

// Block lift of the normal form (T0, W0) over F_q(pi); either block may be
// 0 x 0. Throws Singular for non-invertible input.
FlatLift flat_lift(const Matrix<RationalFunction>& T0, const Matrix<RationalFunction>& W0);
FlatLift flat_lift(const Matrix<Fq>& T0, const Matrix<Fq>& W0);

struct GeneratorVerdict {
  std::string label;
  std::string image;    // image polynomial
  std::string verdict;  // "zero", "span", "ideal" or "fail"
  bool ok() const { return verdict != "fail"; }
};

struct MapCheck {
  std::string name;
  std::string source;
  std::string target;
  std::vector<GeneratorVerdict> generators;
  bool ok() const;
};

struct SubstitutionReport {
  int sp{0};
  int p{0};
  std::vector<MapCheck> maps;
  bool ok() const;
};

// The change-of-variables chain between the local ring presentation and the
// reduced one. inverses adds the reverse maps, which need Groebner bases.
SubstitutionReport substitution_check(int sp, int p = 1, bool inverses = true, unsigned q = 3);

struct ReducednessReport {
  int m{0};
  std::string ideal;
  GroebnerBasis gb;
  bool principal{false};
  std::string generator;
  bool generator_squarefree{false};
  bool initial_ideal_squarefree{false};
  std::map<std::string, bool> membership;  // certificate -> holds
  bool ok() const;
};

// Special fiber (T + T^t, W + W^t, T W) with T, W skew m x m (free entries).
// m = 2 gives the base case; m = 4 is the long job.
ReducednessReport reducedness_check(int m, unsigned q = 3, const GroebnerOptions& opt = {});

// gcd(f, df/dv) has degree 0 for each variable v, testing univariate
// specializations at every point of a small grid.
bool squarefree_by_derivatives(const MultiPoly& f);

struct FlatLiftTrials {
  int a{0};
  int b{0};
  unsigned q{5};
  int trials{0};
  int passed{0};
  std::vector<std::string> failures;  // T0 and W0 of the first failing trials
  bool ok() const { return trials > 0 && passed == trials; }
};
// flat_lift on seeded random invertible T0 (a x a) and W0 (b x b) over
// F_q(pi), entries quotients of polynomials of degree <= 2 and <= 1.
FlatLiftTrials flat_lift_trials(int a, int b, int trials, std::uint64_t seed, unsigned q = 5);

}  // namespace splitmod
