#include "oitm/assignment.hpp"

#include <limits>

namespace oitm {
namespace {

constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;

// Hungarian method with column potentials, one Dijkstra-style scan per row.
// Returns nullopt when no perfect assignment avoids the forbidden cells.
std::optional<std::vector<int>> hungarian(const CostMatrix& a) {
    const int n = a.size();
    if (n == 0) return std::vector<int>{};
    // 1-based with a virtual column 0, after the classical formulation.
    std::vector<Weight> u(n + 1, 0), v(n + 1, 0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<Weight> minv(n + 1, kInf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            const int i0 = p[j0];
            Weight delta = kInf;
            int j1 = -1;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                if (a.allowed(i0 - 1, j - 1)) {
                    const Weight cur = *a.at(i0 - 1, j - 1) - u[i0] - v[j];
                    if (cur < minv[j]) {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            if (j1 < 0 || delta >= kInf) return std::nullopt;  // no augmenting path
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else if (minv[j] < kInf) {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    std::vector<int> perm(n, -1);
    for (int j = 1; j <= n; ++j) perm[p[j] - 1] = j - 1;
    return perm;
}

Weight perm_cost(const CostMatrix& a, const std::vector<int>& perm) {
    Weight c = 0;
    for (int r = 0; r < a.size(); ++r) c += *a.at(r, perm[r]);
    return c;
}

}  // namespace

std::optional<Weight> min_cost_value(const CostMatrix& costs) {
    auto perm = hungarian(costs);
    if (!perm) return std::nullopt;
    return perm_cost(costs, *perm);
}

AssignmentResult min_cost_assignment(const CostMatrix& costs) {
    const int n = costs.size();
    AssignmentResult res;
    auto base = min_cost_value(costs);
    if (!base) return res;

    // Fix rows top-down to the smallest column that still completes at the
    // optimal cost. Completion checks re-run the Hungarian on the residue.
    std::vector<int> perm(n, -1);
    std::vector<bool> col_used(n, false);
    Weight spent = 0;
    for (int r = 0; r < n; ++r) {
        bool placed = false;
        for (int c = 0; c < n && !placed; ++c) {
            if (col_used[c] || !costs.allowed(r, c)) continue;
            // residue over rows r+1.. and unused columns except c
            std::vector<int> cols;
            for (int j = 0; j < n; ++j)
                if (j != c && !col_used[j]) cols.push_back(j);
            CostMatrix rest(n - r - 1);
            for (int rr = r + 1; rr < n; ++rr)
                for (std::size_t jj = 0; jj < cols.size(); ++jj)
                    rest.at(rr - r - 1, static_cast<int>(jj)) = costs.at(rr, cols[jj]);
            auto rest_cost = min_cost_value(rest);
            if (rest_cost && spent + *costs.at(r, c) + *rest_cost == *base) {
                perm[r] = c;
                col_used[c] = true;
                spent += *costs.at(r, c);
                placed = true;
            }
        }
        if (!placed) return res;  // unreachable if base was feasible
    }
    res.feasible = true;
    res.cost = *base;
    res.perm = std::move(perm);
    return res;
}

}  // namespace oitm
