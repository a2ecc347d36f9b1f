#pragma once

#include <optional>

#include "oitm/tdm_types.hpp"
#include "oitm/types.hpp"

namespace oitm {
namespace tdm {

// Reduction of a 2n-dimensional One-in-Two instance to a 3DM instance of
// size 2n. Layers k < n carry the two star triples of block k; layer n + b
// carries the off-block entries of block b's rows, with j restricted off
// the block. Triple count is nnz + dimension exactly.
std::pair<TdmInstance, TdmContext> reduce_to_3dm(const OitmInstance& inst);

struct TdmValidation {
    bool valid = false;
    std::optional<Weight> cost;
    std::vector<std::string> violations;
};

TdmValidation validate_3dm(const TdmInstance& inst, const TdmSolution& sol);

// Exhaustive layer-by-layer solver with coverage pruning (oracle, n <= 8).
// Weighted instances get the minimum-cost matching regardless of budget.
std::optional<TdmSolution> solve_3dm_bruteforce(const TdmInstance& inst,
                                                int size_cap = 8);

// Maps a 3DM solution of a reduced instance back to a One-in-Two solution.
OitmSolution decode_3dm(const TdmInstance& inst, const TdmSolution& sol,
                        const TdmContext& context);

}  // namespace tdm
}  // namespace oitm
