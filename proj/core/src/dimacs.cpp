#include "oitm/dimacs.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace oitm {
namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw parse_error("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Cnf parse_dimacs(std::istream& in) {
    Cnf cnf;
    int declared_clauses = -1;
    int line_no = 0;
    std::string raw;
    std::vector<int> current;
    bool in_clause = false;
    int clause_start_line = 0;

    while (std::getline(in, raw)) {
        ++line_no;
        std::istringstream ls(raw);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank
        if (tok == "c" || tok[0] == 'c') continue;
        if (tok == "p") {
            if (declared_clauses >= 0) fail(line_no, "duplicate header");
            std::string fmt;
            long long v = -1, c = -1;
            if (!(ls >> fmt >> v >> c) || fmt != "cnf" || v < 0 || c < 0)
                fail(line_no, "malformed header, expected `p cnf <vars> <clauses>`");
            cnf.num_vars = static_cast<int>(v);
            declared_clauses = static_cast<int>(c);
            continue;
        }
        if (declared_clauses < 0) fail(line_no, "clause data before header");
        // literal tokens, possibly several clauses per line
        ls.clear();
        ls.str(raw);
        long long lit = 0;
        while (ls >> tok) {
            char* end = nullptr;
            lit = std::strtoll(tok.c_str(), &end, 10);
            if (end == tok.c_str() || *end != '\0')
                fail(line_no, "unexpected token `" + tok + "`");
            if (lit == 0) {
                if (!in_clause) fail(line_no, "empty clause");
                cnf.clauses.push_back(current);
                current.clear();
                in_clause = false;
                continue;
            }
            if (std::llabs(lit) > cnf.num_vars)
                fail(line_no, "literal " + std::to_string(lit) + " out of range (" +
                                  std::to_string(cnf.num_vars) + " variables)");
            if (!in_clause) {
                in_clause = true;
                clause_start_line = line_no;
            }
            current.push_back(static_cast<int>(lit));
        }
    }
    if (in_clause)
        fail(clause_start_line, "clause missing terminating 0");
    if (declared_clauses < 0) throw parse_error("missing `p cnf` header");
    if (static_cast<int>(cnf.clauses.size()) != declared_clauses)
        throw parse_error("header declares " + std::to_string(declared_clauses) +
                          " clauses, file has " + std::to_string(cnf.clauses.size()));
    return cnf;
}

Cnf parse_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return parse_dimacs(in);
}

void emit_dimacs(std::ostream& out, const Cnf& cnf) {
    out << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
    for (const auto& clause : cnf.clauses) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
}

bool assignment_satisfies(const Cnf& cnf, const std::vector<bool>& assignment,
                          bool nae) {
    for (const auto& clause : cnf.clauses) {
        int sat_lits = 0;
        for (int lit : clause) {
            const bool v = assignment[std::abs(lit) - 1];
            sat_lits += (lit > 0) == v;
        }
        if (sat_lits == 0) return false;
        if (nae && sat_lits == static_cast<int>(clause.size())) return false;
    }
    return true;
}

std::vector<std::vector<bool>> all_satisfying_assignments(const Cnf& cnf, bool nae) {
    if (cnf.num_vars > 20) throw resource_error("CNF oracle limited to 20 variables");
    std::vector<std::vector<bool>> out;
    for (std::uint32_t mask = 0; mask < (1u << cnf.num_vars); ++mask) {
        std::vector<bool> a(cnf.num_vars);
        for (int i = 0; i < cnf.num_vars; ++i) a[i] = (mask >> i) & 1;
        if (assignment_satisfies(cnf, a, nae)) out.push_back(std::move(a));
    }
    return out;
}

bool cnf_satisfiable(const Cnf& cnf, bool nae) {
    if (cnf.num_vars > 20) throw resource_error("CNF oracle limited to 20 variables");
    for (std::uint32_t mask = 0; mask < (1u << cnf.num_vars); ++mask) {
        std::vector<bool> a(cnf.num_vars);
        for (int i = 0; i < cnf.num_vars; ++i) a[i] = (mask >> i) & 1;
        if (assignment_satisfies(cnf, a, nae)) return true;
    }
    return false;
}

}  // namespace oitm
