#pragma once

#include <memory>
#include <string>
#include <vector>

#include "splitmod/multipoly.hpp"

namespace splitmod {

struct GroebnerOptions {
  long long pair_cap{100000};
  int max_vars{16};
};

struct GroebnerBasis {
  std::shared_ptr<const PolyRing> ring;
  std::vector<MultiPoly> polys;  // reduced, monic, increasing leading monomials
  long long pairs_processed{0};
  long long zero_reductions{0};

  std::size_t size() const { return polys.size(); }
  bool is_principal() const { return polys.size() == 1; }
};

// Reduced Groebner basis under the order of the generators' ring. Throws
// BudgetExceeded past max_vars variables or pair_cap processed pairs.
GroebnerBasis groebner(const std::vector<MultiPoly>& generators, const GroebnerOptions& opt = {});
// Same, after moving the generators to a copy of their ring with another order.
GroebnerBasis groebner(const std::vector<MultiPoly>& generators, MonomialOrder order, const GroebnerOptions& opt = {});

// Full normal form of f modulo the polynomials of g (any list, leading terms
// taken in f's ring).
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& g);
// Normal form against a basis; zero iff f lies in the ideal. f is moved into
// the basis ring by variable names when the rings differ.
MultiPoly reduce_poly(const MultiPoly& f, const GroebnerBasis& gb);
bool ideal_contains(const GroebnerBasis& gb, const MultiPoly& f);

// True when every leading monomial of the basis is squarefree; then the ideal
// is radical.
bool squarefree_initial_ideal(const GroebnerBasis& gb);

// Plain-text polynomial files: '#' comment lines, then one polynomial per
// line. write_polynomials emits "# order: ..." and "# vars: ..." headers that
// read_polynomials uses to rebuild the ring.
std::string write_polynomials(const std::shared_ptr<const PolyRing>& ring, const std::vector<MultiPoly>& polys);
struct PolynomialFile {
  std::shared_ptr<const PolyRing> ring;
  std::vector<MultiPoly> polys;
};
PolynomialFile read_polynomials(const std::string& text, unsigned q);
std::vector<MultiPoly> read_polynomials(const std::string& text, const std::shared_ptr<const PolyRing>& ring);

}  // namespace splitmod
