#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "oitm/types.hpp"

namespace oitm {
namespace classify {

// Gauge group S_k x (Z_2)^k on truth tables: relabeling of literal indices
// times independent negations. Element (perm, flips) sends assignment tau
// to tau' with tau'_i = tau_perm(i) xor flips_i.
struct GaugeElement {
    std::vector<int> perm;   // size k, a permutation of 0..k-1
    std::uint32_t flips = 0;

    static GaugeElement identity(int k);
    GaugeElement compose(const GaugeElement& then) const;
    GaugeElement inverse() const;
};

TruthTable apply_gauge(const GaugeElement& g, const TruthTable& t);

// Literal negation R_i as a gauge element.
GaugeElement negation(int k, int i);

std::vector<TruthTable> gauge_orbit(const TruthTable& t);   // arity <= 6
TruthTable canonical(const TruthTable& t);                  // min n(T) in orbit
std::uint64_t orbit_size(const TruthTable& t);

enum class Rule { None, Rule1, Rule2, Rule3, Rule4, Rule5 };

// Lowest applicable triviality rule with its witness:
//   Rule1 T empty, Rule2 T full, Rule3(i) literal i unused,
//   Rule4(i, value) literal i forced, Rule5(i, j, parity) pair forced.
struct Triviality {
    Rule rule = Rule::None;
    int i = -1;
    int j = -1;
    bool value = false;   // Rule4 forced value / Rule5 parity (tau_i xor tau_j)

    std::string describe() const;
};

Triviality triviality(const TruthTable& t);

// The five kernel constants, exact 18-digit decimals scaled by 10^18.
// These printed truncations are the definition.
struct SignatureConstants {
    static constexpr std::int64_t scale_pow10 = 18;
    static constexpr std::array<std::int64_t, 5> scaled = {
        1000000000000000000,   // r(0) = 1
        831907372580707469,    // r(1) = 1/zeta(3)
        -577215664901532861,   // r(2) = -EulerGamma
        367879441171442322,    // r(3) = 1/e
        -318309886183790672,   // r(4) = -1/pi
    };
};

// Gauge-invariant class fingerprint: floor of 10^16 times the determinant
// of the kernel matrix r(d(tau, tau')) over T, the complement of T taken
// first when |T| > 2^(k-1). Exact integer arithmetic throughout; requires
// arity <= 4 (r(d) is defined up to d = 4).
std::int64_t signature(const TruthTable& t);

// Full k = 4 discrimination audit: every table grouped into gauge classes,
// classes keyed by (effective size, signature), collisions reported.
struct AuditCollision {
    int effective_size = 0;
    std::int64_t signature = 0;
    // canonical indices of the colliding complement-closed families
    std::vector<std::vector<std::uint64_t>> families;
};

struct AuditReport {
    int num_classes = 0;            // all 2^16 tables
    int num_target_classes = 0;     // classes with 3 <= |T| <= 13
    std::vector<AuditCollision> collisions;  // distinct families sharing a key

    std::string summary() const;
};

AuditReport discrimination_audit();

// Canonical index of every k=4 table, computed once (65536 entries).
const std::vector<std::uint32_t>& canonical_index_k4();

}  // namespace classify
}  // namespace oitm
