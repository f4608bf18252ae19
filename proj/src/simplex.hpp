#pragma once

#include "int_vector.hpp"

namespace prevariety {

/// Outcome of a phase-one solve of {u >= 0 : M u = b}.
struct StandardFormResult {
    bool feasible = false;
    // Feasible: u = primal / denominator.
    IntVector primal;
    Integer denominator;
    // Infeasible: y with y^T M <= 0 componentwise and y^T b > 0.
    IntVector farkas;
    std::size_t pivots = 0;
};

/// Exact phase-one simplex on a fraction-free integer tableau with Bland's
/// rule. Rows of `m` are the equality constraints; rows with a negative
/// right-hand side are negated internally and the certificate is mapped back.
StandardFormResult solve_standard_form(const IntMatrix& m, const IntVector& b,
                                       std::size_t num_columns);

}  // namespace prevariety
