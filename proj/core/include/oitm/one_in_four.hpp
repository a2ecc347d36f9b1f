#pragma once

#include "oitm/assignment.hpp"
#include "oitm/types.hpp"

namespace oitm {

// One-in-Four relaxation: all four cells of each diagonal block act as
// stars, so the per-block choices factorize and the problem collapses to a
// plain assignment. Cell (i, j), i != j, of the collapsed matrix is the
// minimum over the present entries of block (i, j); blocks without entries
// and the diagonal are forbidden.
CostMatrix one_in_four_collapse(const OitmInstance& inst);

// Minimum One-in-Four cost via the collapse, or nullopt when infeasible.
std::optional<Weight> solve_one_in_four(const OitmInstance& inst);

// Exhaustive (sigma, tau, block permutation) enumeration; oracle for tests.
std::optional<Weight> brute_force_one_in_four(const OitmInstance& inst,
                                              int block_cap = 6);

}  // namespace oitm
