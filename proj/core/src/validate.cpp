#include "oitm/validate.hpp"

#include <algorithm>

namespace oitm {

ValidationReport validate_solution(const OitmInstance& inst,
                                   const OitmSolution& sol) {
    ValidationReport report;
    const int B = inst.block_count();
    if (static_cast<int>(sol.sigma.size()) != B ||
        static_cast<int>(sol.perm_target.size()) != B) {
        report.violations.push_back("dimension mismatch: instance has " +
                                    std::to_string(B) + " blocks, solution has " +
                                    std::to_string(sol.sigma.size()) + "/" +
                                    std::to_string(sol.perm_target.size()));
        return report;
    }

    // Exactly one star per block is implied by the representation; what can
    // go wrong is the permutation part.
    std::vector<bool> col_used(inst.dimension(), false);
    Weight cost = 0;
    bool ok = true;
    for (int b = 0; b < B; ++b) {
        const int row = sol.free_index(b);
        const int col = sol.perm_target[b];
        if (col < 0 || col >= inst.dimension()) {
            report.violations.push_back("block " + std::to_string(b + 1) +
                                        ": permutation target out of range");
            ok = false;
            continue;
        }
        if (col == row) {
            report.violations.push_back(
                "block " + std::to_string(b + 1) +
                ": free index maps to itself (both stars of a block used)");
            ok = false;
            continue;
        }
        const int cb = OitmInstance::block_of(col);
        if (sol.free_index(cb) != col) {
            report.violations.push_back("block " + std::to_string(b + 1) +
                                        ": target " + std::to_string(col + 1) +
                                        " is a fixed (starred) column");
            ok = false;
            continue;
        }
        if (col_used[col]) {
            report.violations.push_back("column " + std::to_string(col + 1) +
                                        " used twice; perm is not a bijection");
            ok = false;
            continue;
        }
        col_used[col] = true;
        auto w = inst.entry(row, col);
        if (!w) {
            report.violations.push_back("edge (" + std::to_string(row + 1) + ", " +
                                        std::to_string(col + 1) +
                                        ") is not an entry of the instance");
            ok = false;
            continue;
        }
        cost += *w;
    }
    report.valid = ok;
    if (ok && inst.is_weighted()) report.cost = cost;
    return report;
}

Minor minor_of(const OitmInstance& inst, std::span<const std::uint8_t> sigma) {
    const int B = inst.block_count();
    if (static_cast<int>(sigma.size()) != B)
        throw domain_error("sigma length does not match block count");

    Minor minor;
    minor.size = B;
    std::vector<int> row_pos(inst.dimension(), -1), col_pos(inst.dimension(), -1);
    for (int b = 0; b < B; ++b) {
        const int free = 2 * b + (sigma[b] ? 1 : 0);
        minor.free_rows.push_back(free);
        minor.free_cols.push_back(free);
        row_pos[free] = b;
        col_pos[free] = b;
    }
    minor.adj.resize(B);
    minor.weight.resize(B);
    for (const Entry& e : inst.entries()) {
        const int r = row_pos[e.row], c = col_pos[e.col];
        if (r < 0 || c < 0) continue;
        minor.adj[r].push_back(c);
        minor.weight[r].push_back(e.weight);
    }
    return minor;
}

OitmSolution embed_minor_permutation(const OitmInstance& inst,
                                     std::span<const std::uint8_t> sigma,
                                     std::span<const int> minor_perm) {
    const int B = inst.block_count();
    if (static_cast<int>(minor_perm.size()) != B)
        throw domain_error("minor permutation length does not match block count");
    OitmSolution sol;
    sol.sigma.assign(sigma.begin(), sigma.end());
    sol.perm_target.resize(B);
    for (int b = 0; b < B; ++b) {
        const int target_block = minor_perm[b];
        sol.perm_target[b] = 2 * target_block + (sigma[target_block] ? 1 : 0);
    }
    return sol;
}

}  // namespace oitm
