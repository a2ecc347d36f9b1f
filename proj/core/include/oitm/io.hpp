#pragma once

#include <iosfwd>
#include <string>

#include "oitm/types.hpp"
#include "oitm/tdm_types.hpp"

// Text formats. All indices are 1-based on disk, `#` starts a comment.
//
//   instance:  line 1 `oitm <B> [weighted <budget>]`, then `i j` or `i j w`
//   solution:  line 1 `sigma <bitstring of length B>`,
//              line 2 `perm <B targets in original 1..2B indexing>`
//   3dm:       line 1 `3dm <n> [weighted <budget>]`, then `i j k [w]`

namespace oitm {

OitmInstance read_instance(std::istream& in);
OitmInstance read_instance_file(const std::string& path);
void write_instance(std::ostream& out, const OitmInstance& inst);

OitmSolution read_solution(std::istream& in);
void write_solution(std::ostream& out, const OitmSolution& sol);

TdmInstance read_tdm(std::istream& in);
void write_tdm(std::ostream& out, const TdmInstance& inst);

}  // namespace oitm
