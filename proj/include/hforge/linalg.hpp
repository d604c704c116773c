#ifndef HFORGE_LINALG_HPP
#define HFORGE_LINALG_HPP

#include "hforge/field.hpp"

#include <optional>
#include <vector>

namespace hforge {

using FeMatrix = std::vector<std::vector<Fe>>;
using FeVector = std::vector<Fe>;

FeMatrix fe_identity(const ChartPtr& chart, int n);
Fe fe_det(const FeMatrix& m);
// Gauss-Jordan over the function field; pivots prefer the structurally
// simplest nonzero entry (fewest monomials).  Throws "singular".
FeMatrix fe_inverse(const FeMatrix& m);
FeMatrix fe_mul(const FeMatrix& a, const FeMatrix& b);
FeVector fe_apply(const FeMatrix& a, const FeVector& x);

// unique solution of a square system; nullopt when singular/inconsistent
std::optional<FeVector> fe_solve(FeMatrix a, FeVector b);

int fe_rank(FeMatrix m);

// least structural size: solves sum_i c_i vectors[i] = target exactly;
// nullopt when target is outside the span
std::optional<FeVector> span_coefficients(const std::vector<FeVector>& vectors,
                                          const FeVector& target);

}  // namespace hforge

#endif
