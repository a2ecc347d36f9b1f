#include "oitm/one_in_four.hpp"

#include <algorithm>
#include <numeric>

namespace oitm {

CostMatrix one_in_four_collapse(const OitmInstance& inst) {
    if (!inst.is_weighted())
        throw domain_error("one-in-four collapse needs a weighted instance");
    const int n = inst.block_count();
    CostMatrix out(n);
    for (const Entry& e : inst.entries()) {
        const int bi = e.row / 2, bj = e.col / 2;
        auto& cell = out.at(bi, bj);
        if (!cell || e.weight < *cell) cell = e.weight;
    }
    for (int i = 0; i < n; ++i) out.at(i, i).reset();
    return out;
}

std::optional<Weight> solve_one_in_four(const OitmInstance& inst) {
    return min_cost_value(one_in_four_collapse(inst));
}

std::optional<Weight> brute_force_one_in_four(const OitmInstance& inst,
                                              int block_cap) {
    if (!inst.is_weighted())
        throw domain_error("one-in-four brute force needs a weighted instance");
    const int n = inst.block_count();
    if (n > block_cap || n > 14)
        throw resource_error("one-in-four brute force limited to " +
                             std::to_string(block_cap) + " blocks");

    std::optional<Weight> best;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool fixed_point = false;
        for (int i = 0; i < n; ++i) fixed_point |= perm[i] == i;
        if (fixed_point && n > 0) continue;
        // sigma picks the departing row per block, tau the receiving column.
        for (std::uint32_t smask = 0; smask < (1u << n); ++smask) {
            for (std::uint32_t tmask = 0; tmask < (1u << n); ++tmask) {
                Weight cost = 0;
                bool ok = true;
                for (int i = 0; i < n && ok; ++i) {
                    const int row = 2 * i + ((smask >> i) & 1);
                    const int col = 2 * perm[i] + ((tmask >> perm[i]) & 1);
                    auto w = inst.entry(row, col);
                    if (!w)
                        ok = false;
                    else
                        cost += *w;
                }
                if (ok && (!best || cost < *best)) best = cost;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace oitm
