#include "oitm/one_in_two.hpp"

#include <algorithm>
#include <numeric>

#include "oitm/matching.hpp"
#include "oitm/validate.hpp"

namespace oitm {
namespace {

// ----------------------------------------------------------------------
// Decision engine: depth-first search over sigma with unit propagation.
//
// Deciding a block stars one index and frees the other. A free row must be
// matched to a stored entry in a free column and vice versa, which drives
// two sound rules:
//   - an index with no remaining counterpart candidates cannot be free,
//     so its block is forced to star it;
//   - a free row (column) with exactly one candidate is bound to it.
// Branching follows block order with the 0 branch first, so the first
// solution found carries the lowest sigma in ascending binary order.
// ----------------------------------------------------------------------

constexpr std::int8_t kUndecided = -1;

struct SearchState {
    std::vector<std::int8_t> sigma;  // per block: -1 / 0 / 1
    std::vector<int> bound_row;      // row -> col, -1 when unbound
    std::vector<int> bound_col;      // col -> row
};

class DecisionSearch {
public:
    explicit DecisionSearch(const OitmInstance& inst, std::uint64_t node_limit)
        : inst_(inst),
          B_(inst.block_count()),
          dim_(inst.dimension()),
          node_limit_(node_limit) {
        cols_of_row_.resize(dim_);
        rows_of_col_.resize(dim_);
        for (const Entry& e : inst.entries()) {
            cols_of_row_[e.row].push_back(e.col);
            rows_of_col_[e.col].push_back(e.row);
        }
    }

    std::optional<OitmSolution> run() {
        SearchState root;
        root.sigma.assign(B_, kUndecided);
        root.bound_row.assign(dim_, -1);
        root.bound_col.assign(dim_, -1);
        solution_.reset();
        nodes_ = 0;
        std::vector<int> dirty;
        for (int i = 0; i < dim_; ++i) {
            dirty.push_back(encode_row(i));
            dirty.push_back(encode_col(i));
        }
        if (!propagate(root, std::move(dirty))) return std::nullopt;
        dfs(root);
        return solution_;
    }

private:
    enum class Role { Star, Free, Open };  // Open = block undecided

    Role role(const SearchState& s, int index) const {
        const std::int8_t sig = s.sigma[index / 2];
        if (sig == kUndecided) return Role::Open;
        const int free = (index / 2) * 2 + (sig ? 1 : 0);
        return index == free ? Role::Free : Role::Star;
    }

    // Candidate columns for index `row` acting as a free row.
    int count_row_candidates(const SearchState& s, int row, int* only) const {
        int n = 0;
        for (int c : cols_of_row_[row]) {
            if (role(s, c) == Role::Star || s.bound_col[c] >= 0) continue;
            if (only) *only = c;
            ++n;
        }
        return n;
    }

    int count_col_candidates(const SearchState& s, int col, int* only) const {
        int n = 0;
        for (int r : rows_of_col_[col]) {
            if (role(s, r) == Role::Star || s.bound_row[r] >= 0) continue;
            if (only) *only = r;
            ++n;
        }
        return n;
    }

    // Forces sigma so that `index` is the star of its block.
    bool force_star(SearchState& s, int index, std::vector<int>& dirty) const {
        const int b = index / 2;
        const std::int8_t want = (index % 2 == 0) ? 1 : 0;  // star first slot <=> sigma 1
        if (s.sigma[b] == want) return true;
        if (s.sigma[b] != kUndecided) return false;
        return decide(s, b, want, dirty);
    }

    // Applies sigma[b] = value; returns false on an immediate contradiction.
    bool decide(SearchState& s, int b, std::int8_t value, std::vector<int>& dirty) const {
        if (s.sigma[b] != kUndecided) return s.sigma[b] == value;
        s.sigma[b] = value;
        const int star = 2 * b + (value ? 0 : 1);
        const int free = 2 * b + (value ? 1 : 0);
        // A bound index can no longer be starred.
        if (s.bound_row[star] >= 0 || s.bound_col[star] >= 0) return false;
        // Neighbours lose the star as a candidate; the free pair gains
        // an obligation.
        for (int c : cols_of_row_[star])
            dirty.push_back(encode_col(c));
        for (int r : rows_of_col_[star])
            dirty.push_back(encode_row(r));
        dirty.push_back(encode_row(free));
        dirty.push_back(encode_col(free));
        return true;
    }

    static int encode_row(int r) { return r << 1; }
    static int encode_col(int c) { return (c << 1) | 1; }

    bool bind(SearchState& s, int row, int col, std::vector<int>& dirty) const {
        if (s.bound_row[row] >= 0 || s.bound_col[col] >= 0)
            return s.bound_row[row] == col;
        s.bound_row[row] = col;
        s.bound_col[col] = row;
        // row and col leave every other candidate set they were in
        for (int c : cols_of_row_[row])
            if (c != col) dirty.push_back(encode_col(c));
        for (int r : rows_of_col_[col])
            if (r != row) dirty.push_back(encode_row(r));
        return true;
    }

    bool propagate(SearchState& s, std::vector<int> dirty) const {
        while (!dirty.empty()) {
            const int item = dirty.back();
            dirty.pop_back();
            const int index = item >> 1;
            const bool is_row = (item & 1) == 0;

            const Role r = role(s, index);
            if (r == Role::Star) continue;
            const bool bound = is_row ? s.bound_row[index] >= 0
                                      : s.bound_col[index] >= 0;
            if (bound) continue;

            int only = -1;
            const int n = is_row ? count_row_candidates(s, index, &only)
                                 : count_col_candidates(s, index, &only);
            if (n == 0) {
                // cannot be free on this side; the block must star it
                if (r == Role::Free) return false;
                if (!force_star(s, index, dirty)) return false;
            } else if (n == 1 && r == Role::Free) {
                // unit: the single candidate must serve this index
                const int other = only;
                if (role(s, other) == Role::Open) {
                    // the candidate must itself be free
                    const int ob = other / 2;
                    const std::int8_t want = (other % 2 == 0) ? 0 : 1;
                    if (!decide(s, ob, want, dirty)) return false;
                }
                const bool ok = is_row ? bind(s, index, other, dirty)
                                       : bind(s, other, index, dirty);
                if (!ok) return false;
            }
        }
        return true;
    }

    // Hall-style relaxation: free unbound rows must match into columns that
    // are not stars (open blocks count as available). Symmetrically for
    // columns. Failing either check proves the subtree infeasible.
    bool feasible_relaxation(const SearchState& s) const {
        std::vector<std::vector<int>> adj;
        std::vector<int> rows;
        for (int r = 0; r < dim_; ++r) {
            if (role(s, r) != Role::Free || s.bound_row[r] >= 0) continue;
            rows.push_back(r);
            std::vector<int> av;
            for (int c : cols_of_row_[r])
                if (role(s, c) != Role::Star && s.bound_col[c] < 0) av.push_back(c);
            adj.push_back(std::move(av));
        }
        if (matching_size(max_matching(adj, dim_)) != static_cast<int>(rows.size()))
            return false;

        adj.clear();
        std::vector<int> cols;
        for (int c = 0; c < dim_; ++c) {
            if (role(s, c) != Role::Free || s.bound_col[c] >= 0) continue;
            cols.push_back(c);
            std::vector<int> av;
            for (int r : rows_of_col_[c])
                if (role(s, r) != Role::Star && s.bound_row[r] < 0) av.push_back(r);
            adj.push_back(std::move(av));
        }
        return matching_size(max_matching(adj, dim_)) == static_cast<int>(cols.size());
    }

    bool extract_leaf(const SearchState& s) {
        std::vector<int> rows;
        std::vector<std::vector<int>> adj;
        for (int r = 0; r < dim_; ++r) {
            if (role(s, r) != Role::Free || s.bound_row[r] >= 0) continue;
            rows.push_back(r);
            std::vector<int> av;
            for (int c : cols_of_row_[r])
                if (role(s, c) == Role::Free && s.bound_col[c] < 0) av.push_back(c);
            adj.push_back(std::move(av));
        }
        auto match = max_matching(adj, dim_);
        if (matching_size(match) != static_cast<int>(rows.size())) return false;

        OitmSolution sol;
        sol.sigma.resize(B_);
        sol.perm_target.assign(B_, -1);
        for (int b = 0; b < B_; ++b) sol.sigma[b] = static_cast<std::uint8_t>(s.sigma[b]);
        for (int r = 0; r < dim_; ++r)
            if (role(s, r) == Role::Free && s.bound_row[r] >= 0)
                sol.perm_target[r / 2] = s.bound_row[r];
        for (std::size_t i = 0; i < rows.size(); ++i)
            sol.perm_target[rows[i] / 2] = match[i];
        solution_ = std::move(sol);
        return true;
    }

    bool dfs(const SearchState& parent) {
        if (++nodes_ > node_limit_)
            throw resource_error("one-in-two search exceeded " +
                                 std::to_string(node_limit_) + " nodes");
        int branch = -1;
        for (int b = 0; b < B_; ++b)
            if (parent.sigma[b] == kUndecided) {
                branch = b;
                break;
            }
        if (branch < 0) return extract_leaf(parent);
        if (!feasible_relaxation(parent)) return false;

        for (std::int8_t v : {std::int8_t{0}, std::int8_t{1}}) {
            SearchState child = parent;
            std::vector<int> dirty;
            if (decide(child, branch, v, dirty) &&
                propagate(child, std::move(dirty)) && dfs(child))
                return true;
        }
        return false;
    }

    const OitmInstance& inst_;
    int B_;
    int dim_;
    std::uint64_t node_limit_;
    std::vector<std::vector<int>> cols_of_row_;
    std::vector<std::vector<int>> rows_of_col_;
    std::optional<OitmSolution> solution_;
    std::uint64_t nodes_ = 0;
};

void sigma_from_mask(std::uint64_t mask, int B, std::vector<std::uint8_t>& sigma) {
    sigma.resize(B);
    for (int b = 0; b < B; ++b)
        sigma[b] = (mask >> (B - 1 - b)) & 1;  // block 1 is the most significant bit
}

CostMatrix minor_costs(const Minor& minor) {
    CostMatrix costs(minor.size);
    for (int r = 0; r < minor.size; ++r)
        for (std::size_t i = 0; i < minor.adj[r].size(); ++i)
            costs.at(r, minor.adj[r][i]) = minor.weight[r][i];
    return costs;
}

OneInTwoResult solve_weighted(const OitmInstance& inst) {
    const int B = inst.block_count();
    if (B > 62)
        throw resource_error("weighted enumeration limited to 62 blocks");
    OneInTwoResult res;
    std::optional<Weight> best;
    std::uint64_t best_mask = 0;
    std::vector<std::uint8_t> sigma;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << B); ++mask) {
        sigma_from_mask(mask, B, sigma);
        auto value = min_cost_value(minor_costs(minor_of(inst, sigma)));
        if (value && (!best || *value < *best)) {
            best = value;
            best_mask = mask;
        }
    }
    if (!best) return res;

    sigma_from_mask(best_mask, B, sigma);
    const Minor minor = minor_of(inst, sigma);
    auto assignment = min_cost_assignment(minor_costs(minor));
    OitmSolution sol;
    sol.sigma = sigma;
    sol.perm_target.resize(B);
    for (int r = 0; r < B; ++r)
        sol.perm_target[minor.free_rows[r] / 2] = minor.free_cols[assignment.perm[r]];
    res.outcome = *best <= inst.budget() ? SolveOutcome::Sat : SolveOutcome::OverBudget;
    res.solution = std::move(sol);
    res.cost = best;
    return res;
}

}  // namespace

OneInTwoResult solve_one_in_two(const OitmInstance& inst, const SolveOptions& opts) {
    if (inst.block_count() > opts.enumeration_cap)
        throw resource_error("instance has " + std::to_string(inst.block_count()) +
                             " blocks, enumeration cap is " +
                             std::to_string(opts.enumeration_cap));
    if (inst.is_weighted()) return solve_weighted(inst);

    DecisionSearch search(inst, opts.node_limit);
    OneInTwoResult res;
    if (auto sol = search.run()) {
        res.outcome = SolveOutcome::Sat;
        res.solution = std::move(sol);
    }
    return res;
}

OneInTwoResult brute_force_one_in_two(const OitmInstance& inst, int block_cap) {
    const int B = inst.block_count();
    if (B > block_cap || B > 20)
        throw resource_error("brute force limited to " + std::to_string(block_cap) +
                             " blocks, instance has " + std::to_string(B));

    OneInTwoResult res;
    std::optional<Weight> best;
    std::vector<std::uint8_t> sigma;
    std::vector<int> perm(B);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << B); ++mask) {
        sigma_from_mask(mask, B, sigma);
        const Minor minor = minor_of(inst, sigma);
        // dense lookup of minor weights
        std::vector<std::optional<Weight>> cell(static_cast<std::size_t>(B) * B);
        for (int r = 0; r < B; ++r)
            for (std::size_t i = 0; i < minor.adj[r].size(); ++i)
                cell[r * B + minor.adj[r][i]] = minor.weight[r][i];
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool ok = true;
            Weight cost = 0;
            for (int r = 0; r < B && ok; ++r) {
                if (perm[r] == r) {
                    ok = false;  // minor diagonal is the unused star
                    break;
                }
                const auto& w = cell[r * B + perm[r]];
                if (!w)
                    ok = false;
                else
                    cost += *w;
            }
            if (!ok) continue;
            if (!inst.is_weighted()) {
                res.outcome = SolveOutcome::Sat;
                res.solution = embed_minor_permutation(inst, sigma, perm);
                return res;
            }
            if (!best || cost < *best) {
                best = cost;
                res.solution = embed_minor_permutation(inst, sigma, perm);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    if (inst.is_weighted() && best) {
        res.outcome = *best <= inst.budget() ? SolveOutcome::Sat : SolveOutcome::OverBudget;
        res.cost = best;
    }
    return res;
}

}  // namespace oitm
