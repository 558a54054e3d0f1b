#pragma once

#include <vector>

#include "splitmod/linalg.hpp"
#include "splitmod/rational_function.hpp"

namespace splitmod {

using RMatrix = Matrix<RationalFunction>;

struct SmithForm {
  std::vector<int> type;  // a_1 <= ... <= a_n
  RMatrix U;              // u-integral, unit determinant
  RMatrix V;              // u-integral, unit determinant
  int shift{0};           // global u-power removed before the local reduction
};

// Elementary divisors over the local ring of F_q(u) at u = 0, with transforms
// satisfying U * M * V = diag(u^{a_1}, ..., u^{a_n}). Pivots are chosen with
// minimal valuation, ties broken by lowest row then lowest column.
SmithForm smith_form_local(const RMatrix& m);

// diag(u^{a_1}, ..., u^{a_n}) in the context of m.
RMatrix smith_diagonal(RatContext ctx, const std::vector<int>& type);

// u-integral entries and u-unit determinant.
bool is_local_unit_matrix(const RMatrix& m);

}  // namespace splitmod
