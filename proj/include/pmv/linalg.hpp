#pragma once

#include <vector>

#include "pmv/poly.hpp"
#include "pmv/rational.hpp"

namespace pmv {

// Exact rank by fraction-free (Bareiss) elimination: each row is scaled to
// integers first, pivoting takes the first nonzero in column order, so the
// answer is deterministic.
int exact_rank(std::vector<std::vector<Rat>> rows);

// Rank of the span of the given polynomials: rows are coefficient vectors
// over the union of occurring monomials (all polynomials must share one
// variable set).
int exact_rank(const std::vector<SparsePoly>& polys);

// Jacobian matrix of the given polynomials evaluated at a point:
// out[i][j] = d f_i / d x_j at the point.
std::vector<std::vector<Rat>> jacobian_at(const std::vector<SparsePoly>& fs,
                                          const std::vector<Rat>& point);

}  // namespace pmv
