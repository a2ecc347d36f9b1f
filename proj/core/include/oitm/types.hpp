#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Domain types for One-in-Two Matching instances and the objects that feed
// them: solutions, truth tables, factor graphs and clause gadget matrices.
//
// Index conventions used throughout the library:
//   - all indices are 0-based internally; text formats are 1-based,
//     converted at the I/O boundary only.
//   - block b owns matrix indices {2b, 2b+1}. The first slot (2b) is the
//     odd 1-based index 2b-1, the second (2b+1) the even index 2b.
//   - sigma[b] = 1 means the FIRST slot of block b is the fixed point
//     (pi(2b-1) = 2b-1 in 1-based terms); sigma[b] = 0 fixes the second.

namespace oitm {

using Weight = std::int64_t;

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an enumeration would exceed a configured cap. Never a silent
// truncation.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

struct Entry {
    int row = 0;
    int col = 0;
    Weight weight = 0;

    friend bool operator==(const Entry&, const Entry&) = default;
};

// A 2B x 2B sparse 0/1 (or integer-weighted) matrix with B diagonal 2x2
// star blocks. Stars are implicit: every (i, i) is available at weight 0,
// and the two anti-diagonal cells of each block are forbidden. Stored
// entries are strictly off-block.
class OitmInstance {
public:
    OitmInstance() = default;

    // Decision variant: entries carry no weights.
    static OitmInstance decision(int block_count, std::vector<Entry> entries);
    // Weighted variant (One-in-Two Assignment): every entry weighted,
    // budget is the decision threshold on the total cost.
    static OitmInstance weighted(int block_count, std::vector<Entry> entries,
                                 Weight budget);

    int block_count() const { return block_count_; }
    int dimension() const { return 2 * block_count_; }
    bool is_weighted() const { return weighted_; }
    Weight budget() const { return budget_; }

    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t nnz() const { return entries_.size(); }

    // Lookup of a stored entry; nullopt when the cell is absent (forbidden).
    std::optional<Weight> entry(int row, int col) const;

    static int block_of(int index) { return index / 2; }

private:
    OitmInstance(int block_count, std::vector<Entry> entries, bool weighted,
                 Weight budget);

    int block_count_ = 0;
    std::vector<Entry> entries_;  // sorted by (row, col), unique
    bool weighted_ = false;
    Weight budget_ = 0;
};

// A one-in-two solution: the star choice per block plus the permutation of
// the unfixed indices. perm_target[b] is the column index (absolute, 0-based)
// that the free row of block b maps to.
struct OitmSolution {
    std::vector<std::uint8_t> sigma;
    std::vector<int> perm_target;

    int free_index(int block) const { return 2 * block + (sigma[block] ? 1 : 0); }
    int fixed_index(int block) const { return 2 * block + (sigma[block] ? 0 : 1); }
};

struct ValidationReport {
    bool valid = false;
    std::optional<Weight> cost;
    std::vector<std::string> violations;
};

// Minor of the instance after a star choice: a B x B bipartite adjacency
// over the free rows/columns, re-indexed 0..B-1 in ascending order of the
// original indices. The diagonal is forbidden (it would be the unused star).
struct Minor {
    int size = 0;
    std::vector<int> free_rows;   // minor row r  -> original index
    std::vector<int> free_cols;   // minor col c  -> original index
    std::vector<std::vector<int>> adj;        // ascending columns per row
    std::vector<std::vector<Weight>> weight;  // parallel to adj
};

// A k-literal boolean function as a 2^k-bit set. Bit n'(tau) is set iff
// tau is a satisfying assignment, with n'(tau) = sum_i 2^(k-i) [tau_i = True]
// (literal 1 is the most significant bit).
class TruthTable {
public:
    TruthTable() = default;
    explicit TruthTable(int arity);

    int arity() const { return arity_; }
    std::uint32_t num_assignments() const { return 1u << arity_; }

    bool test(std::uint32_t assignment) const;
    void set(std::uint32_t assignment, bool value = true);

    std::uint64_t size() const;  // |T|
    bool empty() const { return size() == 0; }
    bool full() const { return size() == num_assignments(); }

    TruthTable complement() const;

    // n(T) as a plain integer; defined for arity <= 6.
    std::uint64_t index() const;
    static TruthTable from_index(int arity, std::uint64_t index);

    // Assignments as bit patterns n'(tau), ascending.
    std::vector<std::uint32_t> assignments() const;

    friend bool operator==(const TruthTable&, const TruthTable&) = default;
    bool operator<(const TruthTable& other) const;

private:
    int arity_ = 0;
    std::vector<std::uint64_t> bits_;
};

enum class ClauseKind { Sat, Nae, Gadget };

// Bipartite variable/clause graph of a CNF, edges signed by literal
// polarity: +1 for u_i in C_a, -1 for its negation.
struct FactorGraph {
    struct Edge {
        int var = 0;     // 0-based
        int clause = 0;  // 0-based
        int sign = +1;
    };

    int num_vars = 0;
    int num_clauses = 0;
    std::vector<Edge> edges;  // lexicographic by (clause, position in clause)
    std::vector<ClauseKind> kinds;  // one per clause

    std::vector<int> clause_edges(int clause) const;
    std::vector<int> var_edges(int var) const;  // ascending clause index
};

// Off-diagonal quadrant matrix of a clause gadget: 2k x 2k, rows are the
// copy-1 slots, columns the copy-2 slots. Unlike instance entries, cells
// anywhere are legal, including block diagonals.
struct GadgetMatrix {
    int arity = 0;
    // row_masks[r] bit c = cell (r, c), 0-based columns.
    std::vector<std::uint32_t> row_masks;

    int side() const { return 2 * arity; }
    bool cell(int r, int c) const { return (row_masks[r] >> c) & 1u; }
    int ones() const;

    friend bool operator==(const GadgetMatrix&, const GadgetMatrix&) = default;
};

}  // namespace oitm
