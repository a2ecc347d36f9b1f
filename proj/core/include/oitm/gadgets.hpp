#pragma once

#include "oitm/types.hpp"

namespace oitm {
namespace gadgets {

// Clause gadget constructors. Every gadget is a 2k x 2k quadrant matrix
// whose k x k minors decide the truth table: for literal i True the even
// (1-based) row and column of block i survive, for False the odd ones.

// OR clause on k literals: 4k - 3 ones, table = everything but all-False.
GadgetMatrix sat_clause(int k);

// NAE clause: 6k - 8 ones, table = everything but all-False and all-True.
GadgetMatrix nae_clause(int k);

// Exactly two False vectors, (F..F) and (F..F T..T) with h trailing Trues.
// 4k + 2h - 5 ones for 2 <= h <= k-1; h = k degenerates to the NAE gadget.
GadgetMatrix two_false(int k, int h);

// Number of True literals constrained to [hmin, hmax].
GadgetMatrix range_t(int k, int hmin, int hmax);

// Literals read as an MSB-first binary number u; table = { u <= q }.
// 5k - 4 + 2 popcount(q) ones.
GadgetMatrix binary_threshold(int k, std::uint32_t q);

// k = 2h literals read as two h-digit binary numbers; table = { n1 != n2 }.
// 7k - 8 ones.
GadgetMatrix binary_distinct(int h);

// Negates literal `pos` (0-based): swaps the two rows and the two columns
// of that block (the transposition conjugation T W T).
GadgetMatrix negate_literal(const GadgetMatrix& g, int pos);

// Extracts the truth table by testing each k x k minor for a perfect
// matching. Requires arity <= 12.
TruthTable truth_table_of(const GadgetMatrix& g);

// Embeds a gadget into a full instance over 2k blocks: the quadrant in the
// top-right, one identity truth-setting block per literal in the
// bottom-left. Valid solutions project (via the copy-1 sigma bits) onto
// exactly the satisfying assignments of the gadget.
OitmInstance embed(const GadgetMatrix& g);

}  // namespace gadgets
}  // namespace oitm
