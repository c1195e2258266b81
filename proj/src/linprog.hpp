#pragma once

// Internal exact LP feasibility: is there lambda >= 0 with A*lambda = b?
// Phase-one simplex over mpq with Bland's rule; sized for desk-scale cones.

#include "coxk3/numeric.hpp"

namespace coxk3::detail {

bool nonneg_solve(const QMat& a, const QVec& b, QVec* solution = nullptr);

}  // namespace coxk3::detail
