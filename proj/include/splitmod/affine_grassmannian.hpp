#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "splitmod/census.hpp"
#include "splitmod/model_point.hpp"
#include "splitmod/smith.hpp"

namespace splitmod {

// Lattices in F_q((u))^n, given by generator columns in the e-basis. The
// hermitian form phi has Gram H_n (antidiagonal) in that basis and is
// sigma-twisted in the left argument: phi(x, y) = sigma(x)^t H y.
enum class DualForm { HermitianPhi, SymmetricTrace };
const char* to_string(DualForm f);

// Selfdual: I = {0}, n odd, base lattice lambda_0 = standard.
// Pimodular: I = {m}, n even, base lattice lambda_m = span(u^-1 e_1..u^-1 e_m, e_{m+1}..e_n).
enum class Variant { Selfdual, Pimodular };
const char* to_string(Variant v);
Variant parse_variant(const std::string& s);

// Column Hermite form over the local ring at u = 0: lower triangular,
// diagonal u^{a_i}, entries left of the diagonal Laurent polynomials with
// exponents below a_i. Unique for a given lattice. Input may have more
// columns than rows; throws Singular when the columns do not span.
RMatrix hermite_form(const RMatrix& generators);

// Laurent part of f with exponents < a (f's expansion at u = 0, cut off).
RationalFunction laurent_truncate(const RationalFunction& f, int a);

class LaurentLattice {
 public:
  explicit LaurentLattice(const RMatrix& generators);

  static LaurentLattice standard(RatContext ctx, int n);
  static LaurentLattice diagonal(RatContext ctx, const std::vector<int>& exponents);

  int rank() const { return g_.rows(); }
  RatContext context() const { return g_.context(); }
  // Canonical generators (hermite_form).
  const RMatrix& generators() const { return g_; }

  // o inside this.
  bool contains(const LaurentLattice& o) const;
  LaurentLattice scaled(int k) const;              // u^k L
  LaurentLattice transformed(const RMatrix& g) const;  // g L
  LaurentLattice sum(const LaurentLattice& o) const;
  LaurentLattice intersect(const LaurentLattice& o) const;
  LaurentLattice dual(DualForm form = DualForm::HermitianPhi) const;

  std::vector<std::vector<std::string>> to_strings() const;
  std::string to_string() const;

  friend bool operator==(const LaurentLattice& a, const LaurentLattice& b) { return a.g_ == b.g_; }

 private:
  RMatrix g_;
};

// Base lattice lambda_I of the variant.
LaurentLattice base_lattice(RatContext ctx, int n, Variant v);
// e^{-lambda_i} as a diagonal matrix.
RMatrix coweight_matrix(RatContext ctx, int n, int i, Variant v);
// Sorted elementary-divisor exponents of base^-1 L.
std::vector<int> lattice_type(const LaurentLattice& L, const LaurentLattice& base);
// (-1^(i), 0^(n-2i), 1^(i)), the type of e^{-lambda_i} lambda.
std::vector<int> coweight_type(int n, int i);

struct CoweightLabel {
  int index{0};
  Variant variant{Variant::Pimodular};
  std::string to_string() const { return "lambda_" + std::to_string(index); }
  friend bool operator==(const CoweightLabel&, const CoweightLabel&) = default;
};

// Adm(mu_{n-s,s}) as a decreasing chain; step 1 (selfdual) or 2 (pimodular).
std::vector<CoweightLabel> admissible_set(Variant v, int s, int m);

// dim S_i.
inline int schubert_dimension(int n, int i) { return i * (n - i); }

// L satisfies the variant's duality: L^dual = L (selfdual) or u L (pimodular).
bool in_grassmannian(const LaurentLattice& L, Variant v);
// The k with lattice_type(L, lambda_I) = coweight_type(n, k).
int schubert_cell(const LaurentLattice& L, Variant v);
// L in S_i: cell k <= i, with k = i mod 2 in the pimodular variant.
bool in_schubert_variety(const LaurentLattice& L, int i, Variant v);

// Inclusion A inside B with B/A of length j and killed by u.
struct QuotientCheck {
  bool included{false};
  int length{-1};
  bool killed_by_u{false};
  bool is(int j) const { return included && length == j && killed_by_u; }
};
QuotientCheck quotient(const LaurentLattice& sub, const LaurentLattice& super);

struct DemazureReport {
  int i{0};
  Variant variant{Variant::Pimodular};
  bool c1{false};
  bool c2{false};
  bool c3{false};
  bool c4{false};
  bool ok() const { return c1 && c2 && c3 && c4; }
};
DemazureReport demazure_membership(const LaurentLattice& L, const LaurentLattice& Lp, int i, Variant v);

// (e^{-lambda_i} lambda_I, lambda_I') with lambda_m' = lambda_m cap e^{-lambda_i} lambda_m
// and lambda_0' = lambda_0 + e^{-lambda_i} lambda_0.
std::pair<LaurentLattice, LaurentLattice> standard_demazure_pair(RatContext ctx, int n, int i, Variant v);

// Preimage of a t-stable subspace of the frame (lambda_m / u^2 lambda_m, with
// b_i the i-th basis vector of lambda_m and b_{n+i} = u b_i).
LaurentLattice lattice_from_point(const Subspace<Fq>& component, RatContext ctx);

struct PhiReport {
  LaurentLattice L;
  LaurentLattice Lp;
  StratumLabel label;
  int cell{-1};
  bool lattice_F_duality{false};  // L_F = u L_F^dual for phi
  DemazureReport demazure;
  bool square_commutes{false};  // cell == rank(tF)
  bool ok() const { return lattice_F_duality && demazure.ok() && square_commutes; }
};
// (F, G) -> (u^-1 L_F, u L_G^dual). Pimodular only; throws NotInZ unless l = s.
PhiReport phi_map(const Subspace<Fq>& F, const Subspace<Fq>& G, int s);

struct TauReport {
  int n{0};
  int s{0};
  std::map<int, std::set<StratumLabel>> cells;  // cell -> labels seen
  std::map<int, long long> counts;
  bool h_matches_cell{true};
  bool labels_complete{true};  // exhaustive only
  bool exhaustive{false};
  bool ok() const { return h_matches_cell && labels_complete; }
};
// Groups points by schubert_cell(u^-1 L_F). Needs census points.
TauReport tau_fiber_check(const StratumCensus& c);

}  // namespace splitmod
