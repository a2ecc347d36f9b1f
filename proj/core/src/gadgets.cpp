#include "oitm/gadgets.hpp"

#include "oitm/matching.hpp"

namespace oitm {
namespace gadgets {
namespace {

GadgetMatrix blank(int k) {
    GadgetMatrix g;
    g.arity = k;
    g.row_masks.assign(2 * k, 0);
    return g;
}

void set_cell(GadgetMatrix& g, int r, int c) {
    g.row_masks[r] |= std::uint32_t{1} << c;
}

// 2x2 block stamps at block position (bi, bj); `pat` bits: 1 = (+,+),
// 2 = (+,-), 4 = (-,+), 8 = (-,-).
void stamp(GadgetMatrix& g, int bi, int bj, unsigned pat) {
    if (pat & 1) set_cell(g, 2 * bi, 2 * bj);
    if (pat & 2) set_cell(g, 2 * bi, 2 * bj + 1);
    if (pat & 4) set_cell(g, 2 * bi + 1, 2 * bj);
    if (pat & 8) set_cell(g, 2 * bi + 1, 2 * bj + 1);
}

constexpr unsigned kIdent = 0b1001;   // [1 0; 0 1]
constexpr unsigned kTrueDiag = 0b1000;   // [0 0; 0 1]
constexpr unsigned kFalseDiag = 0b0001;  // [1 0; 0 0]
constexpr unsigned kPlusMinus = 0b0010;  // [0 1; 0 0]
constexpr unsigned kMinusPlus = 0b0100;  // [0 0; 1 0]
constexpr unsigned kAllOnes = 0b1111;

}  // namespace

GadgetMatrix sat_clause(int k) {
    if (k < 1) throw domain_error("SAT clause needs k >= 1");
    GadgetMatrix g = blank(k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (i == j) {
                stamp(g, i, j, i == 0 ? kTrueDiag : kIdent);
            } else if (i == 0) {
                stamp(g, i, j, kPlusMinus);
            } else if (j == 0) {
                stamp(g, i, j, kMinusPlus);
            }
        }
    }
    return g;
}

GadgetMatrix nae_clause(int k) {
    if (k < 2) throw domain_error("NAE clause needs k >= 2");
    GadgetMatrix g = blank(k);
    const int last = k - 1;
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (i == j) {
                unsigned pat = 0;
                if (i != last) pat |= kTrueDiag;  // (-,-) unless distinguished last
                if (i != 0) pat |= kFalseDiag;    // (+,+) unless distinguished first
                stamp(g, i, j, pat);
            } else {
                unsigned pat = 0;
                if (i == 0 || j == last) pat |= kPlusMinus;
                if (j == 0 || i == last) pat |= kMinusPlus;
                stamp(g, i, j, pat);
            }
        }
    }
    return g;
}

GadgetMatrix two_false(int k, int h) {
    if (h < 2 || h > k)
        throw domain_error("two-false needs 2 <= h <= k (h = 1 is trivial)");
    if (h == k) return nae_clause(k);  // the two False vectors are antipodal

    GadgetMatrix g = blank(k);
    const int lo = k - h;  // first block of the trailing group
    stamp(g, 0, 0, kTrueDiag);
    for (int j = 1; j < k; ++j) stamp(g, 0, j, kPlusMinus);
    for (int i = 1; i < k; ++i) {
        stamp(g, i, i, kIdent);
        stamp(g, i, 0, i < lo ? kMinusPlus : kFalseDiag);
    }
    for (int i = std::max(lo, 1); i + 1 < k; ++i) {
        stamp(g, i, i + 1, kMinusPlus);
        stamp(g, i + 1, i, kMinusPlus);
    }
    return g;
}

GadgetMatrix range_t(int k, int hmin, int hmax) {
    if (k < 1 || hmin < 0 || hmin > hmax || hmax > k)
        throw domain_error("range-T needs 0 <= hmin <= hmax <= k");
    const int h1 = hmin, h3 = k - hmax;
    auto group = [&](int i) { return i < h1 ? 0 : (i < k - h3 ? 1 : 2); };
    GadgetMatrix g = blank(k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (i == j) {
                const int gi = group(i);
                stamp(g, i, j, gi == 0 ? kTrueDiag : (gi == 1 ? kIdent : kFalseDiag));
            } else if (group(i) != group(j)) {
                stamp(g, i, j, group(i) < group(j) ? kPlusMinus : kMinusPlus);
            }
        }
    }
    return g;
}

GadgetMatrix binary_threshold(int k, std::uint32_t q) {
    if (k < 1 || k > 31 || q >= (std::uint32_t{1} << k))
        throw domain_error("binary threshold needs 0 <= q < 2^k");
    GadgetMatrix g = blank(k);
    auto digit = [&](int i) { return (q >> (k - 1 - i)) & 1u; };  // MSB first
    // A(0) = [1 0; 0 0], A(1) = [0 0; 0 1]
    // B(0) = 0,          B(1) = [1 1; 0 0]
    // C(0) = [1 0; 0 0], C(1) = [1 1; 0 1]
    // The (+,-) cell of C(1) never enters a minor (row and column of a
    // diagonal block are selected by the same literal); it is there so the
    // ones count is 5k - 4 + 2 popcount(q) uniformly.
    for (int i = 0; i + 1 < k; ++i) {
        stamp(g, i, i, digit(i) ? kTrueDiag : kFalseDiag);
        if (digit(i)) stamp(g, i, k - 1, 0b0011);  // B(1)
        stamp(g, i + 1, i, kAllOnes);
    }
    stamp(g, k - 1, k - 1, digit(k - 1) ? (kFalseDiag | kPlusMinus | kTrueDiag)
                                        : kFalseDiag);
    return g;
}

GadgetMatrix binary_distinct(int h) {
    if (h < 1) throw domain_error("binary distinct needs h >= 1");
    const int k = 2 * h;
    GadgetMatrix g = blank(k);
    for (int i = 0; i < h; ++i) stamp(g, i, h + i, 0b0110);  // XOR block
    for (int i = 1; i < h; ++i) {
        stamp(g, i, i, kIdent);
        stamp(g, i - 1, i, kAllOnes);
    }
    for (int i = 0; i + 1 < h; ++i) {
        stamp(g, h + i, h + i, kIdent);
        stamp(g, h + i, h + i + 1, kAllOnes);
    }
    stamp(g, k - 1, 0, kAllOnes);
    return g;
}

GadgetMatrix negate_literal(const GadgetMatrix& g, int pos) {
    if (pos < 0 || pos >= g.arity) throw domain_error("literal position out of range");
    GadgetMatrix out = g;
    std::swap(out.row_masks[2 * pos], out.row_masks[2 * pos + 1]);
    const std::uint32_t lo = std::uint32_t{1} << (2 * pos);
    const std::uint32_t hi = std::uint32_t{1} << (2 * pos + 1);
    for (auto& row : out.row_masks) {
        const bool a = row & lo, b = row & hi;
        row = (row & ~(lo | hi)) | (a ? hi : 0) | (b ? lo : 0);
    }
    return out;
}

TruthTable truth_table_of(const GadgetMatrix& g) {
    const int k = g.arity;
    if (k > 12) throw domain_error("truth table extraction limited to arity 12");
    TruthTable table(k);
    std::vector<std::vector<int>> adj(k);
    for (std::uint32_t tau = 0; tau < (1u << k); ++tau) {
        // literal i (MSB first) True keeps the even 1-based = second 0-based slot
        for (int r = 0; r < k; ++r) {
            adj[r].clear();
            const int row = 2 * r + ((tau >> (k - 1 - r)) & 1);
            for (int c = 0; c < k; ++c) {
                const int col = 2 * c + ((tau >> (k - 1 - c)) & 1);
                if (g.cell(row, col)) adj[r].push_back(c);
            }
        }
        if (matching_size(max_matching(adj, k)) == k) table.set(tau);
    }
    return table;
}

OitmInstance embed(const GadgetMatrix& g) {
    const int k = g.arity;
    std::vector<Entry> entries;
    for (int r = 0; r < 2 * k; ++r)
        for (int c = 0; c < 2 * k; ++c)
            if (g.cell(r, c)) entries.push_back({r, 2 * k + c, 0});
    for (int i = 0; i < 2 * k; ++i) entries.push_back({2 * k + i, i, 0});
    return OitmInstance::decision(2 * k, std::move(entries));
}

}  // namespace gadgets
}  // namespace oitm
