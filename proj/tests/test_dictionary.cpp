#include <sstream>

#include "doctest.h"
#include "oitm/classify.hpp"
#include "oitm/dictionary.hpp"
#include "oitm/gadgets.hpp"

using namespace oitm;
using namespace oitm::gadgets;

namespace {

const Dictionary& dict() {
    static const Dictionary d = Dictionary::load_file(OITM_DICTIONARY_PATH);
    return d;
}

}  // namespace

TEST_CASE("dictionary loads all 384 entries") {
    CHECK(dict().entries().size() == 384);
}

TEST_CASE("the head entry parses to the advertised fields") {
    const DictEntry& e = dict().entries().front();
    CHECK(e.t_size == 3);
    CHECK(e.signature == -15162648248230256LL);
    CHECK(e.table_index == 8226);
    CHECK(e.row_bytes == std::vector<std::uint32_t>{1, 64, 32, 17, 8, 0, 0, 144});
    CHECK(e.ones == 8);
    CHECK(e.matrix().ones() == 8);
    CHECK(e.note.find("R4") != std::string::npos);
}

TEST_CASE("malformed dictionary lines are rejected") {
    auto load = [](const std::string& text) {
        std::istringstream in(text);
        return Dictionary::load(in);
    };
    CHECK_THROWS_AS(load("3 -1 8226 1 64 32 17 8 0 0\n"), parse_error);   // 7 bytes
    CHECK_THROWS_AS(load("3 -1 8226 1 64 32 17 8 0 0 144\n"), parse_error);  // no ones
    CHECK_THROWS_AS(load("3 -1 8226 1 64 32 17 8 0 0 144 9\n"), parse_error);  // popcount
    CHECK_THROWS_AS(load("3 -1 999999 1 64 32 17 8 0 0 144 8\n"), parse_error);
    CHECK_NOTHROW(load("3 -1 8226 1 64 32 17 8 0 0 144 8 some note\n"));
}

TEST_CASE("lookup keys on the gauge class, not the raw index") {
    // any gauge image of a declared table finds the same entry
    const DictEntry& e = dict().entries().front();
    const TruthTable declared = e.declared_table();
    const DictEntry* direct = dict().lookup(declared);
    REQUIRE(direct != nullptr);
    CHECK(direct->table_index == e.table_index);

    classify::GaugeElement g = classify::GaugeElement::identity(4);
    g.perm = {2, 0, 3, 1};
    g.flips = 0b0110;
    const DictEntry* via_gauge = dict().lookup(classify::apply_gauge(g, declared));
    REQUIRE(via_gauge != nullptr);
    CHECK(via_gauge->table_index == e.table_index);
}

TEST_CASE("arity routing: non-k4 queries are not served by the dictionary") {
    // one-in-three lives in the range-T family, not here
    TruthTable one_in_three(3);
    for (std::uint32_t p : {1u, 2u, 4u}) one_in_three.set(p);
    CHECK(dict().lookup(one_in_three) == nullptr);
}

TEST_CASE("tables outside every declared class miss") {
    // |T| = 1 classes were omitted from the dictionary
    TruthTable singleton(4);
    singleton.set(3);
    CHECK(dict().lookup(singleton) == nullptr);
}

TEST_CASE("row byte decoding is MSB = column 1") {
    DictEntry e;
    e.t_size = 1;
    e.table_index = 0;
    e.row_bytes = {128, 1, 0, 0, 0, 0, 0, 0};
    e.ones = 2;
    const GadgetMatrix m = e.matrix();
    CHECK(m.cell(0, 0));
    CHECK(m.cell(1, 7));
    CHECK(m.ones() == 2);
}
