#pragma once

#include <iosfwd>

#include "oitm/factor_graph.hpp"
#include "oitm/types.hpp"

namespace oitm {

// Block bookkeeping of an encoding. Each factor-graph edge owns two blocks:
// copy 1 (rows of the satisfaction-testing quadrant) and copy 2 (rows of
// the truth-setting structure). Blocks are numbered first all the 1-copies
// in edge order, then all the 2-copies in the same order.
struct IndexMap {
    struct EdgeBlocks {
        int var = 0;
        int clause = 0;
        int block1 = 0;
        int block2 = 0;
    };

    int num_vars = 0;
    int num_clauses = 0;
    std::vector<EdgeBlocks> edges;
    std::vector<std::vector<int>> var_cycle;  // var -> edge ids, cyclic order
};

struct Encoding {
    OitmInstance instance;
    IndexMap map;
};

// The reduction: truth-setting entries in the bottom-left quadrant force
// all edge-copies of a variable to one boolean value; clause gadgets in the
// top-right quadrant test satisfaction. Dimension is 4|E|; nonzeros are
// 2|E| plus 4k-3 (SAT) or 6k-8 (NAE) per clause of length k. Negated
// literals conjugate the clause quadrant by the block transposition.
Encoding encode(const FactorGraph& fg);

// Reads the boolean assignment off a valid solution: a variable is True
// iff its blocks star the first slot. All copies of a variable must agree;
// a disagreement raises domain_error (it would be an encoder bug).
std::vector<bool> decode(const OitmSolution& sol, const IndexMap& map);

struct EncodingStats {
    int dimension = 0;
    std::size_t nnz = 0;
    std::size_t predicted_nnz = 0;
    bool quadrants_pure = false;  // entries only top-right / bottom-left
};

EncodingStats stats(const OitmInstance& inst, const FactorGraph& fg);

// Sidecar map format: lines `edge <var> <clause> <block1> <block2>`, 1-based.
void write_index_map(std::ostream& out, const IndexMap& map);
IndexMap read_index_map(std::istream& in);

}  // namespace oitm
