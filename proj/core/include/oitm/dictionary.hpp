#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "oitm/types.hpp"

namespace oitm {
namespace gadgets {

// One line of the k=4 truth-table dictionary:
//   <|T|> <signature> <nT> <r1> .. <r2k> <ones> [annotation...]
// Row bytes encode matrix rows with the most significant bit as column 1.
struct DictEntry {
    int t_size = 0;
    std::int64_t signature = 0;
    std::uint32_t table_index = 0;  // n(T)
    std::vector<std::uint32_t> row_bytes;
    int ones = 0;
    std::string note;

    int arity() const { return static_cast<int>(row_bytes.size()) / 2; }
    GadgetMatrix matrix() const;
    TruthTable declared_table() const;
};

class Dictionary {
public:
    static Dictionary load(std::istream& in);
    static Dictionary load_file(const std::string& path);

    const std::vector<DictEntry>& entries() const { return entries_; }

    // Keys on the canonical gauge-class index of the query table; returns
    // nullptr when the table's class is not in the dictionary or the arity
    // is not 4 (smaller arities are served by the closed-form families).
    const DictEntry* lookup(const TruthTable& table) const;

private:
    std::vector<DictEntry> entries_;
    std::map<std::uint32_t, std::size_t> by_class_;
};

}  // namespace gadgets
}  // namespace oitm
