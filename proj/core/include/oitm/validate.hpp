#pragma once

#include <span>

#include "oitm/types.hpp"

namespace oitm {

// Checks the one-in-two structure and entry membership of a solution.
// When the instance is weighted and the solution is structurally valid,
// the report carries the cost (stars contribute 0).
ValidationReport validate_solution(const OitmInstance& inst,
                                   const OitmSolution& sol);

// The B x B minor left after removing the rows and columns fixed by sigma.
// The minor diagonal is the unused star of each block and is forbidden;
// it never appears in the adjacency because stored entries are off-block.
Minor minor_of(const OitmInstance& inst, std::span<const std::uint8_t> sigma);

// Rebuilds a full solution from a star choice and a minor permutation
// (minor_perm[r] = minor column index).
OitmSolution embed_minor_permutation(const OitmInstance& inst,
                                     std::span<const std::uint8_t> sigma,
                                     std::span<const int> minor_perm);

}  // namespace oitm
