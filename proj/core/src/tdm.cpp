#include "oitm/tdm.hpp"

#include <algorithm>

namespace oitm {
namespace tdm {

std::pair<TdmInstance, TdmContext> reduce_to_3dm(const OitmInstance& inst) {
    const int B = inst.block_count();
    TdmInstance out;
    out.n = inst.dimension();
    out.weighted = inst.is_weighted();
    out.budget = inst.budget();
    // star layers: the two deterministic entries per block
    for (int b = 0; b < B; ++b) {
        out.triples.push_back({2 * b, 2 * b, b, 0});
        out.triples.push_back({2 * b + 1, 2 * b + 1, b, 0});
    }
    // row layers: layer B + b carries the off-block entries of block b
    for (const Entry& e : inst.entries())
        out.triples.push_back({e.row, e.col, B + e.row / 2, e.weight});
    return {std::move(out), TdmContext{B}};
}

TdmValidation validate_3dm(const TdmInstance& inst, const TdmSolution& sol) {
    TdmValidation v;
    const int n = inst.n;
    if (static_cast<int>(sol.chosen.size()) != n) {
        v.violations.push_back("solution must pick exactly " + std::to_string(n) +
                               " triples");
        return v;
    }
    std::vector<int> cover_i(n, 0), cover_j(n, 0), cover_k(n, 0);
    Weight cost = 0;
    for (int idx : sol.chosen) {
        if (idx < 0 || idx >= static_cast<int>(inst.triples.size())) {
            v.violations.push_back("triple index out of range");
            return v;
        }
        const auto& t = inst.triples[idx];
        ++cover_i[t.i];
        ++cover_j[t.j];
        ++cover_k[t.k];
        cost += t.w;
    }
    for (int x = 0; x < n; ++x) {
        if (cover_i[x] != 1)
            v.violations.push_back("first-class vertex " + std::to_string(x + 1) +
                                   " covered " + std::to_string(cover_i[x]) + " times");
        if (cover_j[x] != 1)
            v.violations.push_back("second-class vertex " + std::to_string(x + 1) +
                                   " covered " + std::to_string(cover_j[x]) + " times");
        if (cover_k[x] != 1)
            v.violations.push_back("third-class vertex " + std::to_string(x + 1) +
                                   " covered " + std::to_string(cover_k[x]) + " times");
    }
    v.valid = v.violations.empty();
    if (v.valid && inst.weighted) v.cost = cost;
    return v;
}

namespace {

struct BruteState {
    const TdmInstance& inst;
    std::vector<std::vector<int>> by_layer;
    std::vector<bool> used_i, used_j;
    std::vector<int> chosen;
    std::optional<Weight> best_cost;
    std::optional<TdmSolution> best;

    explicit BruteState(const TdmInstance& in) : inst(in) {
        by_layer.resize(in.n);
        for (int t = 0; t < static_cast<int>(in.triples.size()); ++t)
            by_layer[in.triples[t].k].push_back(t);
        used_i.assign(in.n, false);
        used_j.assign(in.n, false);
    }

    void dfs(int layer, Weight cost) {
        if (layer == inst.n) {
            if (!best_cost || cost < *best_cost) {
                best_cost = cost;
                best = TdmSolution{chosen};
            }
            return;
        }
        for (int t : by_layer[layer]) {
            const auto& tr = inst.triples[t];
            if (used_i[tr.i] || used_j[tr.j]) continue;
            used_i[tr.i] = used_j[tr.j] = true;
            chosen.push_back(t);
            dfs(layer + 1, cost + tr.w);
            chosen.pop_back();
            used_i[tr.i] = used_j[tr.j] = false;
            if (!inst.weighted && best) return;  // decision: first hit wins
        }
    }
};

}  // namespace

std::optional<TdmSolution> solve_3dm_bruteforce(const TdmInstance& inst, int size_cap) {
    if (inst.n > size_cap)
        throw resource_error("3DM brute force limited to n = " +
                             std::to_string(size_cap));
    BruteState state(inst);
    state.dfs(0, 0);
    return state.best;
}

OitmSolution decode_3dm(const TdmInstance& inst, const TdmSolution& sol,
                        const TdmContext& context) {
    const int B = context.block_count;
    if (inst.n != 2 * B)
        throw domain_error("context does not match the 3DM instance size");
    OitmSolution out;
    out.sigma.assign(B, 0);
    out.perm_target.assign(B, -1);
    std::vector<bool> star_seen(B, false);
    for (int idx : sol.chosen) {
        const auto& t = inst.triples[idx];
        if (t.k < B) {
            if (t.i != t.j || t.i / 2 != t.k)
                throw domain_error("layer " + std::to_string(t.k + 1) +
                                   " triple is not a star of its block");
            out.sigma[t.k] = t.i % 2 == 0;  // first slot starred <=> sigma 1
            star_seen[t.k] = true;
        } else {
            const int b = t.k - B;
            if (t.i / 2 != b)
                throw domain_error("row-layer triple outside its block row pair");
            out.perm_target[b] = t.j;
        }
    }
    for (int b = 0; b < B; ++b)
        if (!star_seen[b])
            throw domain_error("no star triple chosen for block " + std::to_string(b + 1));
    return out;
}

}  // namespace tdm
}  // namespace oitm
