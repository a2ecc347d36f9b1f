#pragma once

#include <vector>

#include "oitm/types.hpp"

namespace oitm {

// Balanced bipartite graph on n rows and n columns, adjacency stored per
// row with ascending column indices. Costs, when present, run parallel to
// the adjacency lists.
struct BipartiteGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;
    std::vector<std::vector<Weight>> cost;  // empty for unweighted graphs

    static BipartiteGraph unweighted(int n, std::vector<std::vector<int>> adj);
};

// Maximum-cardinality matching (Hopcroft-Karp). match[row] = column or -1.
// Deterministic: rows and adjacency are scanned in ascending order.
std::vector<int> max_matching(const BipartiteGraph& g);

int matching_size(const std::vector<int>& match);

// Convenience for solver internals: maximum matching given raw adjacency.
std::vector<int> max_matching(const std::vector<std::vector<int>>& adj, int num_cols);

}  // namespace oitm
