#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "oitm/types.hpp"

namespace oitm {

// A CNF as parsed: clauses of signed 1-based variable numbers
// (DIMACS convention, negative = negated).
struct Cnf {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
};

// Parses standard DIMACS cnf. Comments and blank lines are tolerated;
// a malformed header, out-of-range literal, missing terminating 0, an
// empty clause or a header/body mismatch raise parse_error with the
// offending line number.
Cnf parse_dimacs(std::istream& in);
Cnf parse_dimacs_file(const std::string& path);

void emit_dimacs(std::ostream& out, const Cnf& cnf);

// Test oracle: satisfying assignment by exhaustive enumeration
// (num_vars <= 20), empty when unsatisfiable.
std::vector<std::vector<bool>> all_satisfying_assignments(const Cnf& cnf,
                                                          bool nae = false);
bool cnf_satisfiable(const Cnf& cnf, bool nae = false);
bool assignment_satisfies(const Cnf& cnf, const std::vector<bool>& assignment,
                          bool nae = false);

}  // namespace oitm
