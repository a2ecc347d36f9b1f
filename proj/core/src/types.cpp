#include "oitm/types.hpp"

#include <algorithm>
#include <bit>

namespace oitm {

OitmInstance::OitmInstance(int block_count, std::vector<Entry> entries,
                           bool weighted, Weight budget)
    : block_count_(block_count),
      entries_(std::move(entries)),
      weighted_(weighted),
      budget_(budget) {
    if (block_count_ < 0) throw domain_error("negative block count");
    const int dim = dimension();
    for (const Entry& e : entries_) {
        if (e.row < 0 || e.row >= dim || e.col < 0 || e.col >= dim)
            throw domain_error("entry (" + std::to_string(e.row + 1) + ", " +
                               std::to_string(e.col + 1) + ") out of range");
        if (block_of(e.row) == block_of(e.col))
            throw domain_error("entry (" + std::to_string(e.row + 1) + ", " +
                               std::to_string(e.col + 1) +
                               ") lies inside a diagonal block");
    }
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) {
                  return std::tie(a.row, a.col) < std::tie(b.row, b.col);
              });
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i - 1].row == entries_[i].row &&
            entries_[i - 1].col == entries_[i].col)
            throw domain_error("duplicate entry (" +
                               std::to_string(entries_[i].row + 1) + ", " +
                               std::to_string(entries_[i].col + 1) + ")");
    }
}

OitmInstance OitmInstance::decision(int block_count, std::vector<Entry> entries) {
    for (Entry& e : entries) e.weight = 0;
    return OitmInstance(block_count, std::move(entries), false, 0);
}

OitmInstance OitmInstance::weighted(int block_count, std::vector<Entry> entries,
                                    Weight budget) {
    return OitmInstance(block_count, std::move(entries), true, budget);
}

std::optional<Weight> OitmInstance::entry(int row, int col) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(),
                               std::pair<int, int>{row, col},
                               [](const Entry& e, const std::pair<int, int>& key) {
                                   return std::pair<int, int>{e.row, e.col} < key;
                               });
    if (it != entries_.end() && it->row == row && it->col == col)
        return it->weight;
    return std::nullopt;
}

TruthTable::TruthTable(int arity) : arity_(arity) {
    if (arity < 1 || arity > 16) throw domain_error("truth table arity out of [1, 16]");
    bits_.resize(((1u << arity) + 63) / 64, 0);
}

bool TruthTable::test(std::uint32_t a) const {
    return (bits_[a >> 6] >> (a & 63)) & 1u;
}

void TruthTable::set(std::uint32_t a, bool value) {
    if (a >= num_assignments()) throw domain_error("assignment out of range");
    if (value)
        bits_[a >> 6] |= std::uint64_t{1} << (a & 63);
    else
        bits_[a >> 6] &= ~(std::uint64_t{1} << (a & 63));
}

std::uint64_t TruthTable::size() const {
    std::uint64_t n = 0;
    for (std::uint64_t w : bits_) n += std::popcount(w);
    return n;
}

TruthTable TruthTable::complement() const {
    TruthTable out(arity_);
    for (std::uint32_t a = 0; a < num_assignments(); ++a)
        out.set(a, !test(a));
    return out;
}

std::uint64_t TruthTable::index() const {
    if (arity_ > 6) throw domain_error("n(T) exceeds 64 bits for arity > 6");
    return bits_.empty() ? 0 : bits_[0];
}

TruthTable TruthTable::from_index(int arity, std::uint64_t index) {
    TruthTable t(arity);
    if (arity > 6) throw domain_error("n(T) index form requires arity <= 6");
    if (arity < 6 && index >> (1u << arity))
        throw domain_error("table index out of range for arity " + std::to_string(arity));
    t.bits_[0] = index;
    return t;
}

std::vector<std::uint32_t> TruthTable::assignments() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t a = 0; a < num_assignments(); ++a)
        if (test(a)) out.push_back(a);
    return out;
}

bool TruthTable::operator<(const TruthTable& other) const {
    if (arity_ != other.arity_) return arity_ < other.arity_;
    // compare as n(T): most significant word last
    for (std::size_t i = bits_.size(); i-- > 0;)
        if (bits_[i] != other.bits_[i]) return bits_[i] < other.bits_[i];
    return false;
}

std::vector<int> FactorGraph::clause_edges(int clause) const {
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e)
        if (edges[e].clause == clause) out.push_back(e);
    return out;
}

std::vector<int> FactorGraph::var_edges(int var) const {
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e)
        if (edges[e].var == var) out.push_back(e);
    std::sort(out.begin(), out.end(), [this](int a, int b) {
        return edges[a].clause < edges[b].clause;
    });
    return out;
}

int GadgetMatrix::ones() const {
    int n = 0;
    for (std::uint32_t m : row_masks) n += std::popcount(m);
    return n;
}

}  // namespace oitm
