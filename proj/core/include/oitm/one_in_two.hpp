#pragma once

#include <optional>

#include "oitm/assignment.hpp"
#include "oitm/types.hpp"

namespace oitm {

enum class SolveOutcome { Sat, Unsat, OverBudget };

struct OneInTwoResult {
    SolveOutcome outcome = SolveOutcome::Unsat;
    std::optional<OitmSolution> solution;  // present unless Unsat
    std::optional<Weight> cost;            // present for weighted instances

    bool sat() const { return outcome == SolveOutcome::Sat; }
};

struct SolveOptions {
    // Refuse instances with more blocks than this. The weighted optimizer
    // enumerates all 2^B star choices; the decision engine searches the
    // same space with pruning, in ascending binary order of sigma.
    int enumeration_cap = 24;
    // Hard ceiling on decision search nodes; exceeding it raises
    // resource_error rather than returning a truncated answer.
    std::uint64_t node_limit = std::uint64_t{1} << 26;
};

// Decision: returns a valid solution iff one exists, the one with the
// lowest sigma in ascending binary order (block 1 is the most significant
// bit). Weighted: returns a minimum-cost solution, reporting OverBudget
// when the optimum exceeds the instance budget.
OneInTwoResult solve_one_in_two(const OitmInstance& inst,
                                const SolveOptions& opts = {});

// Exhaustive (sigma, minor permutation) enumeration; ground truth for
// tests. Same result contract as solve_one_in_two.
OneInTwoResult brute_force_one_in_two(const OitmInstance& inst,
                                      int block_cap = 6);

}  // namespace oitm
