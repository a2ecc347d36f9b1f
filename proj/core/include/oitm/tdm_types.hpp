#pragma once

#include <cstdint>
#include <vector>

#include "oitm/types.hpp"

namespace oitm {

// A 3-Dimensional Matching instance: triples over three n-element vertex
// classes, optionally integer-weighted with a budget (Numerical 3DM).
struct TdmInstance {
    struct Triple {
        int i = 0, j = 0, k = 0;  // 0-based
        Weight w = 0;

        friend bool operator==(const Triple&, const Triple&) = default;
    };

    int n = 0;
    std::vector<Triple> triples;
    bool weighted = false;
    Weight budget = 0;
};

// n chosen triples, stored as indices into TdmInstance::triples.
struct TdmSolution {
    std::vector<int> chosen;
};

// Ties a reduced 3DM instance back to the One-in-Two instance it came from.
struct TdmContext {
    int block_count = 0;
};

}  // namespace oitm
