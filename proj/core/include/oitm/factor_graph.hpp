#pragma once

#include "oitm/dimacs.hpp"
#include "oitm/types.hpp"

namespace oitm {

// Builds the bipartite variable/clause graph of a CNF; edge signs copy the
// literal polarity. Edges are ordered lexicographically by (clause index,
// position in clause), which also fixes the block numbering downstream.
// Duplicate (var, clause) incidences are rejected.
FactorGraph build_factor_graph(const Cnf& cnf,
                               ClauseKind uniform_kind = ClauseKind::Sat);
FactorGraph build_factor_graph(const Cnf& cnf, std::vector<ClauseKind> kinds);

}  // namespace oitm
