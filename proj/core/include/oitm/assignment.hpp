#pragma once

#include <optional>
#include <vector>

#include "oitm/types.hpp"

namespace oitm {

// Dense n x n cost matrix where absent cells are forbidden. Forbidden
// cells are represented by absence, never by large finite sentinels.
class CostMatrix {
public:
    CostMatrix() = default;
    explicit CostMatrix(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n) {}

    int size() const { return n_; }
    std::optional<Weight>& at(int r, int c) { return cells_[r * n_ + c]; }
    const std::optional<Weight>& at(int r, int c) const { return cells_[r * n_ + c]; }
    bool allowed(int r, int c) const { return cells_[r * n_ + c].has_value(); }

private:
    int n_ = 0;
    std::vector<std::optional<Weight>> cells_;
};

struct AssignmentResult {
    bool feasible = false;
    Weight cost = 0;
    std::vector<int> perm;  // row -> column
};

// Minimum-cost perfect assignment avoiding forbidden cells (Hungarian
// method, shortest augmenting paths with potentials). Among equal-cost
// optima the lexicographically smallest permutation is returned.
AssignmentResult min_cost_assignment(const CostMatrix& costs);

// Cost-only variant without the lexicographic refinement pass.
std::optional<Weight> min_cost_value(const CostMatrix& costs);

}  // namespace oitm
