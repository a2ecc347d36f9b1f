#include "oitm/classify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

#include "oitm/bigint.hpp"

namespace oitm {
namespace classify {

GaugeElement GaugeElement::identity(int k) {
    GaugeElement g;
    g.perm.resize(k);
    std::iota(g.perm.begin(), g.perm.end(), 0);
    return g;
}

GaugeElement GaugeElement::compose(const GaugeElement& then) const {
    // (then o this): apply *this first
    const int k = static_cast<int>(perm.size());
    GaugeElement out;
    out.perm.resize(k);
    for (int i = 0; i < k; ++i) {
        out.perm[i] = perm[then.perm[i]];
        const bool f = ((flips >> then.perm[i]) & 1) ^ ((then.flips >> i) & 1);
        out.flips |= static_cast<std::uint32_t>(f) << i;
    }
    return out;
}

GaugeElement GaugeElement::inverse() const {
    const int k = static_cast<int>(perm.size());
    GaugeElement out;
    out.perm.resize(k);
    for (int i = 0; i < k; ++i) out.perm[perm[i]] = i;
    for (int i = 0; i < k; ++i)
        out.flips |= ((flips >> out.perm[i]) & 1u) << i;
    return out;
}

GaugeElement negation(int k, int i) {
    GaugeElement g = GaugeElement::identity(k);
    g.flips = std::uint32_t{1} << i;
    return g;
}

namespace {

// bit i of an assignment pattern corresponds to literal k-i (MSB first);
// literal index li reads bit (k-1-li).
inline bool literal_bit(std::uint32_t tau, int k, int li) {
    return (tau >> (k - 1 - li)) & 1u;
}

std::uint32_t apply_to_assignment(const GaugeElement& g, int k, std::uint32_t tau) {
    std::uint32_t out = 0;
    for (int i = 0; i < k; ++i) {
        const bool v = literal_bit(tau, k, g.perm[i]) ^ ((g.flips >> i) & 1u);
        out |= static_cast<std::uint32_t>(v) << (k - 1 - i);
    }
    return out;
}

}  // namespace

TruthTable apply_gauge(const GaugeElement& g, const TruthTable& t) {
    const int k = t.arity();
    if (static_cast<int>(g.perm.size()) != k)
        throw domain_error("gauge element arity mismatch");
    TruthTable out(k);
    for (std::uint32_t tau = 0; tau < t.num_assignments(); ++tau)
        if (t.test(tau)) out.set(apply_to_assignment(g, k, tau));
    return out;
}

namespace {

template <typename Fn>
void for_each_gauge(int k, Fn&& fn) {
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (std::uint32_t flips = 0; flips < (1u << k); ++flips) {
            GaugeElement g;
            g.perm = perm;
            g.flips = flips;
            fn(g);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

std::vector<TruthTable> gauge_orbit(const TruthTable& t) {
    if (t.arity() > 6) throw domain_error("orbit enumeration limited to arity 6");
    std::vector<TruthTable> orbit;
    for_each_gauge(t.arity(), [&](const GaugeElement& g) {
        TruthTable img = apply_gauge(g, t);
        if (std::find(orbit.begin(), orbit.end(), img) == orbit.end())
            orbit.push_back(std::move(img));
    });
    return orbit;
}

TruthTable canonical(const TruthTable& t) {
    if (t.arity() > 6) throw domain_error("canonicalization limited to arity 6");
    TruthTable best = t;
    for_each_gauge(t.arity(), [&](const GaugeElement& g) {
        TruthTable img = apply_gauge(g, t);
        if (img < best) best = img;
    });
    return best;
}

std::uint64_t orbit_size(const TruthTable& t) { return gauge_orbit(t).size(); }

std::string Triviality::describe() const {
    switch (rule) {
        case Rule::None:
            return "none";
        case Rule::Rule1:
            return "Rule1: always UNSAT";
        case Rule::Rule2:
            return "Rule2: always SAT";
        case Rule::Rule3:
            return "Rule3: u" + std::to_string(i + 1) + " unused";
        case Rule::Rule4:
            return "Rule4: u" + std::to_string(i + 1) + " = " +
                   (value ? "True" : "False");
        case Rule::Rule5:
            return "Rule5: u" + std::to_string(i + 1) + " xor u" +
                   std::to_string(j + 1) + " = " + (value ? "True" : "False");
    }
    return "none";
}

Triviality triviality(const TruthTable& t) {
    const int k = t.arity();
    if (t.empty()) return {Rule::Rule1};
    if (t.full()) return {Rule::Rule2};
    for (int i = 0; i < k; ++i)
        if (apply_gauge(negation(k, i), t) == t) return {Rule::Rule3, i};
    auto asg = t.assignments();
    for (int i = 0; i < k; ++i) {
        bool first = literal_bit(asg[0], k, i);
        bool all_same = std::all_of(asg.begin(), asg.end(), [&](std::uint32_t a) {
            return literal_bit(a, k, i) == first;
        });
        if (all_same) return {Rule::Rule4, i, -1, first};
    }
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            bool first = literal_bit(asg[0], k, i) ^ literal_bit(asg[0], k, j);
            bool all_same = std::all_of(asg.begin(), asg.end(), [&](std::uint32_t a) {
                return (literal_bit(a, k, i) ^ literal_bit(a, k, j)) == first;
            });
            if (all_same) return {Rule::Rule5, i, j, first};
        }
    }
    return {Rule::None};
}

namespace {

// Exact determinant of a small integer matrix via the column-subset
// expansion: D[S] with |S| = r+1 is the determinant of rows 0..r on the
// column set S. Division-free.
BigInt det_exact(const std::vector<std::vector<BigInt>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return BigInt(1);
    std::vector<BigInt> d(std::size_t{1} << n);
    d[0] = BigInt(1);
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        const int r = std::popcount(s) - 1;
        BigInt acc;
        int p = 0;
        for (int j = 0; j < n; ++j) {
            if (!((s >> j) & 1)) continue;
            BigInt term = m[r][j] * d[s ^ (1u << j)];
            if ((r + p) % 2 == 0)
                acc += term;
            else
                acc -= term;
            ++p;
        }
        d[s] = std::move(acc);
    }
    return d[(std::size_t{1} << n) - 1];
}

}  // namespace

std::int64_t signature(const TruthTable& t) {
    const int k = t.arity();
    if (k > 4) throw domain_error("signature kernel constants cover arity <= 4 only");
    TruthTable eff = t;
    if (t.size() > (std::uint64_t{1} << (k - 1))) eff = t.complement();
    auto pats = eff.assignments();
    const int m = static_cast<int>(pats.size());
    if (m == 0) return 10000000000000000LL;  // det of the empty matrix is 1

    std::vector<std::vector<BigInt>> mat(m, std::vector<BigInt>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            const int d = std::popcount(pats[a] ^ pats[b]);
            mat[a][b] = BigInt(SignatureConstants::scaled[d]);
        }
    // det(mat) = det(M) * 10^(18 m); signature = floor(10^16 det(M)).
    // Floor (toward minus infinity) is what the printed dictionary agrees
    // with best; frozen by the calibration test.
    const BigInt num = det_exact(mat);
    const BigInt sig = num.floor_div_pow10(18 * m - 16);
    return sig.to_int64();
}

const std::vector<std::uint32_t>& canonical_index_k4() {
    static const std::vector<std::uint32_t> table = [] {
        std::vector<std::uint32_t> canon(1u << 16, 0xffffffffu);
        // precompute assignment remaps for the 384 gauge elements
        std::vector<std::array<std::uint8_t, 16>> maps;
        for_each_gauge(4, [&](const GaugeElement& g) {
            std::array<std::uint8_t, 16> m{};
            for (std::uint32_t tau = 0; tau < 16; ++tau)
                m[tau] = static_cast<std::uint8_t>(apply_to_assignment(g, 4, tau));
            maps.push_back(m);
        });
        for (std::uint32_t t = 0; t < (1u << 16); ++t) {
            if (canon[t] != 0xffffffffu) continue;
            std::vector<std::uint32_t> orbit;
            for (const auto& m : maps) {
                std::uint32_t img = 0;
                for (int tau = 0; tau < 16; ++tau)
                    if ((t >> tau) & 1) img |= 1u << m[tau];
                orbit.push_back(img);
            }
            const std::uint32_t c = *std::min_element(orbit.begin(), orbit.end());
            for (std::uint32_t img : orbit) canon[img] = c;
        }
        return canon;
    }();
    return table;
}

AuditReport discrimination_audit() {
    const auto& canon = canonical_index_k4();
    AuditReport report;

    std::vector<std::uint32_t> classes;
    for (std::uint32_t t = 0; t < (1u << 16); ++t)
        if (canon[t] == t) classes.push_back(t);
    report.num_classes = static_cast<int>(classes.size());

    std::map<std::pair<int, std::int64_t>, std::vector<std::uint32_t>> by_key;
    for (std::uint32_t c : classes) {
        const int size = std::popcount(c);
        if (size < 3 || size > 13) continue;
        ++report.num_target_classes;
        const TruthTable t = TruthTable::from_index(4, c);
        by_key[{static_cast<int>(std::min<std::uint64_t>(size, 16 - size)),
                signature(t)}]
            .push_back(c);
    }

    for (auto& [key, members] : by_key) {
        if (members.size() < 2) continue;
        // merge complement-partner classes: their key sharing is definitional
        std::vector<std::vector<std::uint64_t>> families;
        std::vector<bool> used(members.size(), false);
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (used[i]) continue;
            std::vector<std::uint64_t> family{members[i]};
            used[i] = true;
            const std::uint32_t comp = canon[~members[i] & 0xffffu];
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (!used[j] && members[j] == comp) {
                    family.push_back(members[j]);
                    used[j] = true;
                }
            families.push_back(std::move(family));
        }
        if (families.size() > 1)
            report.collisions.push_back({key.first, key.second, std::move(families)});
    }
    return report;
}

std::string AuditReport::summary() const {
    std::ostringstream os;
    os << "k=4 gauge classes: " << num_classes << " total, " << num_target_classes
       << " with 3 <= |T| <= 13\n";
    if (collisions.empty()) {
        os << "no (|T_eff|, signature) collisions between distinct classes\n";
        return os.str();
    }
    os << collisions.size() << " signature collisions between distinct classes:\n";
    for (const auto& c : collisions) {
        os << "  |T_eff| = " << c.effective_size << ", signature = " << c.signature
           << ": classes";
        for (const auto& fam : c.families) {
            os << " {";
            for (std::size_t i = 0; i < fam.size(); ++i)
                os << (i ? " " : "") << fam[i];
            os << "}";
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace classify
}  // namespace oitm
