#include "oitm/encode.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "oitm/gadgets.hpp"

namespace oitm {

Encoding encode(const FactorGraph& fg) {
    const int E = static_cast<int>(fg.edges.size());
    IndexMap map;
    map.num_vars = fg.num_vars;
    map.num_clauses = fg.num_clauses;
    map.var_cycle.resize(fg.num_vars);
    for (int e = 0; e < E; ++e) {
        map.edges.push_back({fg.edges[e].var, fg.edges[e].clause, e, E + e});
        map.var_cycle[fg.edges[e].var].push_back(e);
    }
    // var_cycle is ascending by clause index already: edges are ordered by
    // (clause, position) and each (var, clause) pair is unique.

    std::vector<Entry> entries;

    // truth-setting: ((i,a)-_2, (i,a)-_1) and ((i,a)+_2, (i,next a)+_1)
    for (int v = 0; v < fg.num_vars; ++v) {
        const auto& cyc = map.var_cycle[v];
        for (std::size_t p = 0; p < cyc.size(); ++p) {
            const int e = cyc[p];
            const int next = cyc[(p + 1) % cyc.size()];
            entries.push_back({2 * map.edges[e].block2 + 1,
                               2 * map.edges[e].block1 + 1, 0});
            entries.push_back({2 * map.edges[e].block2,
                               2 * map.edges[next].block1, 0});
        }
    }

    // satisfaction-testing: one gadget quadrant per clause
    for (int a = 0; a < fg.num_clauses; ++a) {
        std::vector<int> clause_edges;
        for (int e = 0; e < E; ++e)
            if (fg.edges[e].clause == a) clause_edges.push_back(e);
        const int k = static_cast<int>(clause_edges.size());
        if (k == 0) throw domain_error("clause " + std::to_string(a + 1) + " is empty");

        GadgetMatrix g;
        switch (fg.kinds[a]) {
            case ClauseKind::Sat:
                g = gadgets::sat_clause(k);
                break;
            case ClauseKind::Nae:
                if (k < 2)
                    throw domain_error("NAE clause " + std::to_string(a + 1) +
                                       " needs length >= 2");
                g = gadgets::nae_clause(k);
                break;
            default:
                throw domain_error("unsupported clause kind in clause " +
                                   std::to_string(a + 1));
        }
        for (int p = 0; p < k; ++p)
            if (fg.edges[clause_edges[p]].sign < 0) g = gadgets::negate_literal(g, p);

        for (int r = 0; r < 2 * k; ++r) {
            for (int c = 0; c < 2 * k; ++c) {
                if (!g.cell(r, c)) continue;
                const int row = 2 * map.edges[clause_edges[r / 2]].block1 + (r & 1);
                const int col = 2 * map.edges[clause_edges[c / 2]].block2 + (c & 1);
                entries.push_back({row, col, 0});
            }
        }
    }

    return {OitmInstance::decision(2 * E, std::move(entries)), std::move(map)};
}

std::vector<bool> decode(const OitmSolution& sol, const IndexMap& map) {
    if (sol.sigma.size() != 2 * map.edges.size())
        throw domain_error("solution does not match the encoding dimensions");
    std::vector<bool> assignment(map.num_vars);
    std::vector<bool> seen(map.num_vars, false);
    for (const auto& eb : map.edges) {
        const bool v1 = sol.sigma[eb.block1];
        const bool v2 = sol.sigma[eb.block2];
        if (v1 != v2)
            throw domain_error("copies of variable " + std::to_string(eb.var + 1) +
                               " disagree between blocks " +
                               std::to_string(eb.block1 + 1) + " and " +
                               std::to_string(eb.block2 + 1));
        if (seen[eb.var] && assignment[eb.var] != v1)
            throw domain_error("copies of variable " + std::to_string(eb.var + 1) +
                               " disagree across clauses");
        assignment[eb.var] = v1;
        seen[eb.var] = true;
    }
    return assignment;
}

EncodingStats stats(const OitmInstance& inst, const FactorGraph& fg) {
    EncodingStats s;
    s.dimension = inst.dimension();
    s.nnz = inst.nnz();

    const long long E = static_cast<long long>(fg.edges.size());
    long long predicted = 2 * E;
    for (int a = 0; a < fg.num_clauses; ++a) {
        long long k = 0;
        for (const auto& e : fg.edges) k += e.clause == a;
        predicted += fg.kinds[a] == ClauseKind::Nae ? 6 * k - 8 : 4 * k - 3;
    }
    s.predicted_nnz = static_cast<std::size_t>(predicted);

    const int half = inst.dimension() / 2;
    s.quadrants_pure = true;
    for (const Entry& e : inst.entries()) {
        const bool top_right = e.row < half && e.col >= half;
        const bool bottom_left = e.row >= half && e.col < half;
        if (!top_right && !bottom_left) s.quadrants_pure = false;
    }
    return s;
}

void write_index_map(std::ostream& out, const IndexMap& map) {
    out << "# vars " << map.num_vars << " clauses " << map.num_clauses << '\n';
    for (const auto& eb : map.edges)
        out << "edge " << (eb.var + 1) << ' ' << (eb.clause + 1) << ' '
            << (eb.block1 + 1) << ' ' << (eb.block2 + 1) << '\n';
}

IndexMap read_index_map(std::istream& in) {
    IndexMap map;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw != "edge")
            throw parse_error("line " + std::to_string(line_no) +
                              ": expected `edge <var> <clause> <b1> <b2>`");
        int var = 0, clause = 0, b1 = 0, b2 = 0;
        if (!(ls >> var >> clause >> b1 >> b2))
            throw parse_error("line " + std::to_string(line_no) + ": malformed edge line");
        map.edges.push_back({var - 1, clause - 1, b1 - 1, b2 - 1});
        map.num_vars = std::max(map.num_vars, var);
        map.num_clauses = std::max(map.num_clauses, clause);
    }
    map.var_cycle.resize(map.num_vars);
    for (int e = 0; e < static_cast<int>(map.edges.size()); ++e)
        map.var_cycle[map.edges[e].var].push_back(e);
    return map;
}

}  // namespace oitm
