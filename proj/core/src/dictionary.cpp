#include "oitm/dictionary.hpp"

#include <bit>
#include <fstream>
#include <sstream>

#include "oitm/classify.hpp"

namespace oitm {
namespace gadgets {

GadgetMatrix DictEntry::matrix() const {
    const int k = arity();
    GadgetMatrix g;
    g.arity = k;
    g.row_masks.resize(2 * k, 0);
    for (int r = 0; r < 2 * k; ++r)
        for (int c = 0; c < 2 * k; ++c)
            if ((row_bytes[r] >> (2 * k - 1 - c)) & 1u)
                g.row_masks[r] |= std::uint32_t{1} << c;
    return g;
}

TruthTable DictEntry::declared_table() const {
    return TruthTable::from_index(arity(), table_index);
}

Dictionary Dictionary::load(std::istream& in) {
    Dictionary dict;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        DictEntry e;
        if (!(ls >> e.t_size)) continue;  // blank
        long long sig = 0, nt = 0;
        if (!(ls >> sig >> nt) || nt < 0 || nt >= (1ll << 16))
            throw parse_error("dictionary line " + std::to_string(line_no) +
                              ": expected `<|T|> <signature> <nT> ...`");
        e.signature = sig;
        e.table_index = static_cast<std::uint32_t>(nt);
        int popcount = 0;
        for (int r = 0; r < 8; ++r) {
            long long b = -1;
            if (!(ls >> b) || b < 0 || b > 255)
                throw parse_error("dictionary line " + std::to_string(line_no) +
                                  ": expected 8 row bytes in [0, 255]");
            e.row_bytes.push_back(static_cast<std::uint32_t>(b));
            popcount += std::popcount(static_cast<std::uint32_t>(b));
        }
        if (!(ls >> e.ones))
            throw parse_error("dictionary line " + std::to_string(line_no) +
                              ": missing ones count");
        if (popcount != e.ones)
            throw parse_error("dictionary line " + std::to_string(line_no) +
                              ": row bytes have " + std::to_string(popcount) +
                              " ones, entry declares " + std::to_string(e.ones));
        std::string word;
        while (ls >> word) {
            if (!e.note.empty()) e.note += ' ';
            e.note += word;
        }
        dict.entries_.push_back(std::move(e));
    }
    const auto& canon = classify::canonical_index_k4();
    for (std::size_t i = 0; i < dict.entries_.size(); ++i)
        dict.by_class_.emplace(canon[dict.entries_[i].table_index], i);
    return dict;
}

Dictionary Dictionary::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open dictionary " + path);
    return load(in);
}

const DictEntry* Dictionary::lookup(const TruthTable& table) const {
    if (table.arity() != 4) return nullptr;
    const auto& canon = classify::canonical_index_k4();
    auto it = by_class_.find(canon[table.index()]);
    return it == by_class_.end() ? nullptr : &entries_[it->second];
}

}  // namespace gadgets
}  // namespace oitm
