#include <random>
#include <sstream>

#include "doctest.h"
#include "oitm/encode.hpp"
#include "oitm/factor_graph.hpp"
#include "oitm/io.hpp"
#include "oitm/one_in_two.hpp"
#include "oitm/tdm.hpp"
#include "oitm/validate.hpp"
#include "support/oracles.hpp"

using namespace oitm;
using namespace oitm::tdm;

TEST_CASE("reduction of a one-block empty instance") {
    const OitmInstance inst = OitmInstance::decision(1, {});
    const auto [three, ctx] = reduce_to_3dm(inst);
    CHECK(three.n == 2);
    REQUIRE(three.triples.size() == 2);  // the two star triples only
    CHECK(three.triples[0] == TdmInstance::Triple{0, 0, 0, 0});
    CHECK(three.triples[1] == TdmInstance::Triple{1, 1, 0, 0});
    CHECK_FALSE(solve_3dm_bruteforce(three).has_value());  // layer 2 is empty
    CHECK(ctx.block_count == 1);
}

TEST_CASE("triple count is nnz plus dimension, exactly") {
    std::mt19937 rng(61);
    for (int it = 0; it < 20; ++it) {
        const OitmInstance inst = test::random_instance(rng, 1 + it % 4, 0.5, false);
        const auto [three, ctx] = reduce_to_3dm(inst);
        CHECK(three.triples.size() == inst.nnz() + inst.dimension());
    }
}

TEST_CASE("validate_3dm: singleton, reuse, and round trips") {
    TdmInstance one;
    one.n = 1;
    one.triples.push_back({0, 0, 0, 0});
    CHECK(validate_3dm(one, TdmSolution{{0}}).valid);

    TdmInstance bad;
    bad.n = 2;
    bad.triples = {{0, 0, 0, 0}, {1, 0, 1, 0}};  // j reused
    const auto v = validate_3dm(bad, TdmSolution{{0, 1}});
    CHECK_FALSE(v.valid);
    CHECK_FALSE(v.violations.empty());
}

TEST_CASE("brute-force 3DM on tiny instances") {
    TdmInstance empty;
    empty.n = 2;
    CHECK_FALSE(solve_3dm_bruteforce(empty).has_value());

    TdmInstance all;
    all.n = 3;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) all.triples.push_back({i, j, k, 0});
    const auto sol = solve_3dm_bruteforce(all);
    REQUIRE(sol.has_value());
    CHECK(validate_3dm(all, *sol).valid);

    CHECK_THROWS_AS(solve_3dm_bruteforce(TdmInstance{9, {}, false, 0}), resource_error);
}

TEST_CASE("one-in-two and its 3DM reduction are equisatisfiable") {
    std::mt19937 rng(62);
    int sat = 0, unsat = 0;
    for (int it = 0; it < 30; ++it) {
        const int B = 2 + static_cast<int>(rng() % 3);
        const OitmInstance inst = test::random_instance(rng, B, 0.3, false);
        const auto [three, ctx] = reduce_to_3dm(inst);
        const auto oitm_res = brute_force_one_in_two(inst);
        const auto tdm_res = solve_3dm_bruteforce(three);
        REQUIRE(oitm_res.sat() == tdm_res.has_value());
        if (tdm_res) {
            ++sat;
            const OitmSolution decoded = decode_3dm(three, *tdm_res, ctx);
            CHECK(validate_solution(inst, decoded).valid);
        } else {
            ++unsat;
        }
    }
    CHECK(sat > 3);
    CHECK(unsat > 3);
}

TEST_CASE("weighted reduction preserves optimal costs") {
    std::mt19937 rng(63);
    for (int it = 0; it < 15; ++it) {
        const OitmInstance inst = test::random_instance(rng, 3, 0.6, true, 9, 30);
        const auto [three, ctx] = reduce_to_3dm(inst);
        const auto oitm_res = brute_force_one_in_two(inst);
        const auto tdm_sol = solve_3dm_bruteforce(three);
        REQUIRE(oitm_res.solution.has_value() == tdm_sol.has_value());
        if (!tdm_sol) continue;
        const auto v = validate_3dm(three, *tdm_sol);
        REQUIRE(v.valid);
        CHECK(v.cost == oitm_res.cost);
        const OitmSolution decoded = decode_3dm(three, *tdm_sol, ctx);
        const auto rep = validate_solution(inst, decoded);
        CHECK(rep.valid);
        CHECK(rep.cost == v.cost);
    }
}

TEST_CASE("sigma is recovered from the star triples") {
    const OitmInstance inst =
        OitmInstance::decision(2, {{0, 2, 0}, {2, 0, 0}, {1, 3, 0}, {3, 1, 0}});
    const auto [three, ctx] = reduce_to_3dm(inst);
    const auto sol = solve_3dm_bruteforce(three);
    REQUIRE(sol.has_value());
    const OitmSolution decoded = decode_3dm(three, *sol, ctx);
    for (int idx : sol->chosen) {
        const auto& t = three.triples[idx];
        if (t.k < ctx.block_count)
            CHECK(decoded.sigma[t.k] == (t.i % 2 == 0 ? 1 : 0));
    }
    CHECK(validate_solution(inst, decoded).valid);
}

TEST_CASE("decode context mismatch is rejected") {
    const OitmInstance inst = OitmInstance::decision(2, {{0, 2, 0}, {2, 0, 0}});
    const auto [three, ctx] = reduce_to_3dm(inst);
    const auto sol = solve_3dm_bruteforce(three);
    REQUIRE(sol.has_value());
    CHECK_THROWS_AS(decode_3dm(three, *sol, TdmContext{5}), domain_error);
}

TEST_CASE("end-to-end pipeline matches the combined size formula") {
    std::istringstream in("p cnf 3 2\n1 2 3 0\n-1 2 -3 0\n");
    const Cnf cnf = parse_dimacs(in);
    for (ClauseKind kind : {ClauseKind::Sat, ClauseKind::Nae}) {
        const FactorGraph fg = build_factor_graph(cnf, kind);
        const auto enc = encode(fg);
        const auto [three, ctx] = reduce_to_3dm(enc.instance);
        const long long E = 6, Vc = 2;
        const long long expected =
            kind == ClauseKind::Sat ? 10 * E - 3 * Vc : 12 * E - 8 * Vc;
        CHECK(static_cast<long long>(three.triples.size()) == expected);
    }
}

TEST_CASE("3dm text format round-trips") {
    std::mt19937 rng(64);
    const OitmInstance inst = test::random_instance(rng, 3, 0.5, true, 9, 12);
    const auto [three, ctx] = reduce_to_3dm(inst);
    std::stringstream s;
    write_tdm(s, three);
    const TdmInstance back = read_tdm(s);
    CHECK(back.n == three.n);
    CHECK(back.weighted == three.weighted);
    CHECK(back.budget == three.budget);
    CHECK(back.triples == three.triples);
}
