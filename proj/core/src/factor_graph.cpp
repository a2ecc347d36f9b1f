#include "oitm/factor_graph.hpp"

#include <set>

namespace oitm {

FactorGraph build_factor_graph(const Cnf& cnf, ClauseKind uniform_kind) {
    return build_factor_graph(
        cnf, std::vector<ClauseKind>(cnf.clauses.size(), uniform_kind));
}

FactorGraph build_factor_graph(const Cnf& cnf, std::vector<ClauseKind> kinds) {
    if (kinds.size() != cnf.clauses.size())
        throw domain_error("one clause kind per clause required");
    FactorGraph fg;
    fg.num_vars = cnf.num_vars;
    fg.num_clauses = static_cast<int>(cnf.clauses.size());
    fg.kinds = std::move(kinds);

    std::set<std::pair<int, int>> seen;
    for (int a = 0; a < fg.num_clauses; ++a) {
        for (int lit : cnf.clauses[a]) {
            const int var = std::abs(lit) - 1;
            if (!seen.insert({var, a}).second)
                throw domain_error("duplicate incidence of variable " +
                                   std::to_string(var + 1) + " in clause " +
                                   std::to_string(a + 1));
            fg.edges.push_back({var, a, lit > 0 ? +1 : -1});
        }
    }
    return fg;
}

}  // namespace oitm
