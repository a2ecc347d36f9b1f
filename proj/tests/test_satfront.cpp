#include <random>
#include <sstream>

#include "doctest.h"
#include "oitm/encode.hpp"
#include "oitm/factor_graph.hpp"
#include "oitm/matching.hpp"
#include "oitm/one_in_two.hpp"
#include "oitm/validate.hpp"
#include "support/oracles.hpp"

using namespace oitm;

namespace {

Cnf parse(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

}  // namespace

TEST_CASE("dimacs: the format definition example") {
    const Cnf cnf = parse("p cnf 2 1\n1 -2 0\n");
    CHECK(cnf.num_vars == 2);
    REQUIRE(cnf.clauses.size() == 1);
    CHECK(cnf.clauses[0] == std::vector<int>{1, -2});
}

TEST_CASE("dimacs: comments, blank lines and multi-line clauses") {
    const Cnf cnf = parse("c a comment\n\np cnf 3 2\n1 2\n3 0\nc mid\n-1 -3 0\n");
    CHECK(cnf.clauses.size() == 2);
    CHECK(cnf.clauses[0] == std::vector<int>{1, 2, 3});
}

TEST_CASE("dimacs: malformed inputs carry line numbers") {
    CHECK_THROWS_AS(parse("p cnf 2\n1 0\n"), parse_error);
    CHECK_THROWS_AS(parse("p cnf 2 1\n1 3 0\n"), parse_error);   // out of range
    CHECK_THROWS_AS(parse("p cnf 2 1\n1 2\n"), parse_error);     // missing 0
    CHECK_THROWS_AS(parse("p cnf 2 2\n1 0\n"), parse_error);     // count mismatch
    CHECK_THROWS_AS(parse("p cnf 2 1\n0\n"), parse_error);       // empty clause
    CHECK_THROWS_AS(parse("1 2 0\n"), parse_error);              // body before header
    try {
        parse("p cnf 2 1\n1 3 0\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("dimacs parser survives random garbage without crashing") {
    std::mt19937 rng(56);
    const std::string alphabet = "pcnf 0123456789-\n\t";
    for (int it = 0; it < 300; ++it) {
        std::string text;
        const int len = static_cast<int>(rng() % 120);
        for (int i = 0; i < len; ++i) text += alphabet[rng() % alphabet.size()];
        try {
            (void)parse(text);
        } catch (const parse_error&) {
            // rejected inputs must throw this and nothing else
        }
    }
}

TEST_CASE("dimacs round-trips through the emitter") {
    std::mt19937 rng(51);
    const Cnf cnf = test::random_ksat(rng, 12, 20, 3);
    std::stringstream s;
    emit_dimacs(s, cnf);
    const Cnf back = parse_dimacs(s);
    CHECK(back.num_vars == cnf.num_vars);
    CHECK(back.clauses == cnf.clauses);
}

TEST_CASE("factor graph copies signs from literal polarity") {
    const FactorGraph fg = build_factor_graph(parse("p cnf 2 1\n1 -2 0\n"));
    REQUIRE(fg.edges.size() == 2);
    CHECK(fg.edges[0].var == 0);
    CHECK(fg.edges[0].sign == +1);
    CHECK(fg.edges[1].var == 1);
    CHECK(fg.edges[1].sign == -1);
}

TEST_CASE("factor graph of the empty CNF is empty") {
    const FactorGraph fg = build_factor_graph(parse("p cnf 0 0\n"));
    CHECK(fg.edges.empty());
    CHECK(fg.num_clauses == 0);
}

TEST_CASE("duplicate incidences are rejected") {
    CHECK_THROWS_AS(build_factor_graph(parse("p cnf 2 1\n1 1 0\n")), domain_error);
    CHECK_THROWS_AS(build_factor_graph(parse("p cnf 2 1\n1 -1 0\n")), domain_error);
}

TEST_CASE("degree sums match the edge count on random CNFs") {
    std::mt19937 rng(52);
    const Cnf cnf = test::random_ksat(rng, 8, 10, 3);
    const FactorGraph fg = build_factor_graph(cnf);
    std::size_t degree_sum = 0;
    for (int v = 0; v < fg.num_vars; ++v) degree_sum += fg.var_edges(v).size();
    CHECK(degree_sum == fg.edges.size());
    std::size_t clause_sum = 0;
    for (int a = 0; a < fg.num_clauses; ++a) clause_sum += fg.clause_edges(a).size();
    CHECK(clause_sum == fg.edges.size());
}

TEST_CASE("encoding a single 3-literal SAT clause hits the size formulas") {
    const Cnf cnf = parse("p cnf 3 1\n1 2 3 0\n");
    const auto enc = encode(build_factor_graph(cnf));
    CHECK(enc.instance.dimension() == 12);  // 4 |E|
    CHECK(enc.instance.nnz() == 15);        // 6 |E| - 3 |V_c|
    const EncodingStats st = stats(enc.instance, build_factor_graph(cnf));
    CHECK(st.predicted_nnz == 15);
    CHECK(st.quadrants_pure);
}

TEST_CASE("encoding a single NAE clause hits the size formulas") {
    const Cnf cnf = parse("p cnf 3 1\n1 2 3 0\n");
    const auto enc = encode(build_factor_graph(cnf, ClauseKind::Nae));
    CHECK(enc.instance.dimension() == 12);
    CHECK(enc.instance.nnz() == 16);  // 8 |E| - 8 |V_c|
    CHECK(stats(enc.instance, build_factor_graph(cnf, ClauseKind::Nae)).predicted_nnz == 16);
}

TEST_CASE("stats of the empty CNF are all zero") {
    const FactorGraph fg = build_factor_graph(parse("p cnf 0 0\n"));
    const auto enc = encode(fg);
    const EncodingStats st = stats(enc.instance, fg);
    CHECK(st.dimension == 0);
    CHECK(st.nnz == 0);
    CHECK(st.predicted_nnz == 0);
}

TEST_CASE("single positive clause encodes to a satisfiable instance") {
    const Cnf cnf = parse("p cnf 3 1\n1 2 3 0\n");
    const auto enc = encode(build_factor_graph(cnf));
    SolveOptions opts;
    opts.enumeration_cap = 16;
    const OneInTwoResult res = solve_one_in_two(enc.instance, opts);
    REQUIRE(res.sat());
    const auto assignment = decode(*res.solution, enc.map);
    CHECK(assignment_satisfies(cnf, assignment));
}

TEST_CASE("contradictory unit clauses encode to an unsatisfiable instance") {
    const Cnf cnf = parse("p cnf 1 2\n1 0\n-1 0\n");
    const auto enc = encode(build_factor_graph(cnf));
    CHECK_FALSE(solve_one_in_two(enc.instance).sat());
    CHECK_FALSE(cnf_satisfiable(cnf));
}

TEST_CASE("single-variable single-clause: all-ones sigma decodes to True") {
    const Cnf cnf = parse("p cnf 1 1\n1 0\n");
    const auto enc = encode(build_factor_graph(cnf));
    const OneInTwoResult res = solve_one_in_two(enc.instance);
    REQUIRE(res.sat());
    CHECK(res.solution->sigma == std::vector<std::uint8_t>{1, 1});
    CHECK(decode(*res.solution, enc.map) == std::vector<bool>{true});
}

TEST_CASE("decode rejects tampered solutions that break truth-setting") {
    const Cnf cnf = parse("p cnf 2 1\n1 2 0\n");
    const auto enc = encode(build_factor_graph(cnf));
    const OneInTwoResult res = solve_one_in_two(enc.instance);
    REQUIRE(res.sat());
    OitmSolution bad = *res.solution;
    bad.sigma[enc.map.edges[0].block2] ^= 1;  // copy disagreement
    CHECK_THROWS_AS(decode(bad, enc.map), domain_error);
}

TEST_CASE("NAE clauses shorter than two literals are rejected") {
    const Cnf cnf = parse("p cnf 1 1\n1 0\n");
    CHECK_THROWS_AS(encode(build_factor_graph(cnf, ClauseKind::Nae)), domain_error);
}

TEST_CASE("gadget clause kinds are rejected by the encoder") {
    const Cnf cnf = parse("p cnf 2 1\n1 2 0\n");
    CHECK_THROWS_AS(encode(build_factor_graph(cnf, ClauseKind::Gadget)), domain_error);
}

TEST_CASE("valid sigma choices force consistent variable copies") {
    // enumerate every sigma of a small encoding: whenever the minor has a
    // perfect matching, all copies of each variable must agree
    const Cnf cnf = parse("p cnf 2 2\n1 2 0\n-1 2 0\n");
    const auto enc = encode(build_factor_graph(cnf));
    const int B = enc.instance.block_count();
    REQUIRE(B == 8);
    int feasible = 0;
    std::vector<std::uint8_t> sigma(B);
    for (std::uint32_t mask = 0; mask < (1u << B); ++mask) {
        for (int b = 0; b < B; ++b) sigma[b] = (mask >> (B - 1 - b)) & 1;
        const Minor minor = minor_of(enc.instance, sigma);
        // perfect matching test on the minor, diagonal forbidden
        std::vector<std::vector<int>> adj(minor.size);
        for (int r = 0; r < minor.size; ++r)
            for (int c : minor.adj[r])
                if (c != r) adj[r].push_back(c);
        const auto match = max_matching(adj, minor.size);
        if (matching_size(match) != minor.size) continue;
        ++feasible;
        for (const auto& eb : enc.map.edges)
            CHECK(sigma[eb.block1] == sigma[eb.block2]);
        for (int v = 0; v < enc.map.num_vars; ++v) {
            const auto& cyc = enc.map.var_cycle[v];
            for (std::size_t i = 1; i < cyc.size(); ++i)
                CHECK(sigma[enc.map.edges[cyc[i]].block1] ==
                      sigma[enc.map.edges[cyc[0]].block1]);
        }
    }
    CHECK(feasible > 0);
}

TEST_CASE("end-to-end equivalence with the CNF oracle on random 3-SAT") {
    std::mt19937 rng(53);
    SolveOptions opts;
    opts.enumeration_cap = 96;
    int sat = 0, unsat = 0;
    for (int it = 0; it < 50; ++it) {
        const int nv = 3 + static_cast<int>(rng() % 8);
        const int nc = 2 + static_cast<int>(rng() % 11);
        const Cnf cnf = test::random_ksat(rng, nv, nc, 3);
        const auto enc = encode(build_factor_graph(cnf));
        const OneInTwoResult res = solve_one_in_two(enc.instance, opts);
        const bool oracle = cnf_satisfiable(cnf);
        REQUIRE(res.sat() == oracle);
        if (oracle) {
            ++sat;
            CHECK(validate_solution(enc.instance, *res.solution).valid);
            CHECK(assignment_satisfies(cnf, decode(*res.solution, enc.map)));
        } else {
            ++unsat;
        }
    }
    CHECK(sat > 0);
}

TEST_CASE("mixed SAT and NAE clause kinds encode and solve together") {
    // (u1 v u2 v u3) as OR, (u1 v -u2 v u4) as NAE, sharing variables
    const Cnf cnf = parse("p cnf 4 2\n1 2 3 0\n1 -2 4 0\n");
    const std::vector<ClauseKind> kinds = {ClauseKind::Sat, ClauseKind::Nae};
    const FactorGraph fg = build_factor_graph(cnf, kinds);
    const auto enc = encode(fg);
    // 2|E| + (4*3-3) + (6*3-8) = 12 + 9 + 10
    CHECK(enc.instance.nnz() == 31);
    CHECK(stats(enc.instance, fg).predicted_nnz == 31);

    auto mixed_oracle = [&](std::uint32_t mask) {
        const bool u1 = mask & 1, u2 = mask & 2, u3 = mask & 4, u4 = mask & 8;
        const bool or_clause = u1 || u2 || u3;
        const int nae_true = int(u1) + int(!u2) + int(u4);
        return or_clause && nae_true >= 1 && nae_true <= 2;
    };
    std::vector<std::uint32_t> expected;
    for (std::uint32_t m = 0; m < 16; ++m)
        if (mixed_oracle(m)) expected.push_back(m);
    REQUIRE_FALSE(expected.empty());

    SolveOptions opts;
    opts.enumeration_cap = 16;
    const OneInTwoResult res = solve_one_in_two(enc.instance, opts);
    REQUIRE(res.sat());
    const auto assignment = decode(*res.solution, enc.map);
    std::uint32_t mask = 0;
    for (int v = 0; v < 4; ++v) mask |= static_cast<std::uint32_t>(assignment[v]) << v;
    CHECK(mixed_oracle(mask));

    // an all-NAE-violating formula: (u1 v u1' impossible) use forced equal pair
    const Cnf hard = parse("p cnf 2 2\n1 2 0\n1 2 0\n");
    const auto enc2 = encode(build_factor_graph(
        hard, std::vector<ClauseKind>{ClauseKind::Sat, ClauseKind::Nae}));
    // SAT clause wants some true; NAE forbids both-equal; satisfiable by u1 != u2
    const OneInTwoResult res2 = solve_one_in_two(enc2.instance, opts);
    REQUIRE(res2.sat());
    const auto a2 = decode(*res2.solution, enc2.map);
    CHECK(a2[0] != a2[1]);
}

TEST_CASE("end-to-end soundness holds at the 12-variable 16-clause bound") {
    std::mt19937 rng(55);
    SolveOptions opts;
    opts.enumeration_cap = 128;
    for (int it = 0; it < 6; ++it) {
        const Cnf cnf = test::random_ksat(rng, 12, 16, 3);
        const auto enc = encode(build_factor_graph(cnf));
        CHECK(enc.instance.block_count() == 96);
        const OneInTwoResult res = solve_one_in_two(enc.instance, opts);
        REQUIRE(res.sat() == cnf_satisfiable(cnf));
        if (res.sat())
            CHECK(assignment_satisfies(cnf, decode(*res.solution, enc.map)));
    }
}

TEST_CASE("index map sidecar round-trips") {
    std::mt19937 rng(54);
    const Cnf cnf = test::random_ksat(rng, 6, 8, 3);
    const auto enc = encode(build_factor_graph(cnf));
    std::stringstream s;
    write_index_map(s, enc.map);
    const IndexMap back = read_index_map(s);
    REQUIRE(back.edges.size() == enc.map.edges.size());
    for (std::size_t i = 0; i < back.edges.size(); ++i) {
        CHECK(back.edges[i].var == enc.map.edges[i].var);
        CHECK(back.edges[i].clause == enc.map.edges[i].clause);
        CHECK(back.edges[i].block1 == enc.map.edges[i].block1);
        CHECK(back.edges[i].block2 == enc.map.edges[i].block2);
    }
}
