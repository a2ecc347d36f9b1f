#include <random>

#include "doctest.h"
#include "oitm/matching.hpp"
#include "oitm/one_in_four.hpp"
#include "oitm/one_in_two.hpp"
#include "oitm/validate.hpp"
#include "support/oracles.hpp"

using namespace oitm;

TEST_CASE("complete 4x4 graph has a perfect matching") {
    std::vector<std::vector<int>> adj(4, {0, 1, 2, 3});
    const BipartiteGraph g = BipartiteGraph::unweighted(4, adj);
    CHECK(matching_size(max_matching(g)) == 4);
}

TEST_CASE("the all-false clause minor has no perfect matching") {
    // [[0, 0], [0, I_{k-1}]] for k = 3
    const BipartiteGraph g = BipartiteGraph::unweighted(3, {{}, {1}, {2}});
    CHECK(matching_size(max_matching(g)) == 2);
}

TEST_CASE("maximum matching equals the permutation oracle on random 6x6") {
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> coin(0, 1);
    for (int it = 0; it < 50; ++it) {
        std::vector<std::vector<int>> adj(6);
        for (int r = 0; r < 6; ++r)
            for (int c = 0; c < 6; ++c)
                if (coin(rng) < 0.35) adj[r].push_back(c);
        const int hk = matching_size(max_matching(BipartiteGraph::unweighted(6, adj)));
        CHECK(hk == test::brute_max_matching(adj, 6));
    }
}

TEST_CASE("assignment on the worked 6x6 matrix") {
    const CostMatrix m = test::worked_assignment_matrix();
    const AssignmentResult res = min_cost_assignment(m);
    REQUIRE(res.feasible);
    // pi = {3,1,2,5,6,4} is a feasible solution at cost 13 under threshold
    // 15; the optimum of this matrix is 9.
    Weight walked = 0;
    const std::vector<int> walked_perm = {2, 0, 1, 4, 5, 3};
    for (int r = 0; r < 6; ++r) walked += *m.at(r, walked_perm[r]);
    CHECK(walked == 13);
    CHECK(res.cost == 9);
    CHECK(res.perm == std::vector<int>{4, 0, 5, 1, 2, 3});  // lex-smallest optimum

    const auto brute = test::brute_assignment(m);
    REQUIRE(brute.has_value());
    CHECK(brute->first == res.cost);
}

TEST_CASE("assignment on the all-zero matrix picks the identity") {
    CostMatrix m(3);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m.at(r, c) = 0;
    const AssignmentResult res = min_cost_assignment(m);
    REQUIRE(res.feasible);
    CHECK(res.cost == 0);
    CHECK(res.perm == std::vector<int>{0, 1, 2});
}

TEST_CASE("assignment equals the permutation oracle on random 5x5") {
    std::mt19937 rng(22);
    std::uniform_int_distribution<Weight> w(0, 9);
    std::uniform_real_distribution<double> coin(0, 1);
    for (int it = 0; it < 30; ++it) {
        CostMatrix m(5);
        for (int r = 0; r < 5; ++r)
            for (int c = 0; c < 5; ++c)
                if (coin(rng) < 0.8) m.at(r, c) = w(rng);
        const auto brute = test::brute_assignment(m);
        const auto fast = min_cost_assignment(m);
        REQUIRE(fast.feasible == brute.has_value());
        if (brute) {
            CHECK(fast.cost == brute->first);
            // lexicographic minimality among optima
            std::vector<int> perm(5);
            std::iota(perm.begin(), perm.end(), 0);
            std::vector<int> lex_best;
            do {
                Weight c = 0;
                bool ok = true;
                for (int r = 0; r < 5 && ok; ++r) {
                    if (!m.allowed(r, perm[r]))
                        ok = false;
                    else
                        c += *m.at(r, perm[r]);
                }
                if (ok && c == brute->first && (lex_best.empty() || perm < lex_best))
                    lex_best = perm;
            } while (std::next_permutation(perm.begin(), perm.end()));
            CHECK(fast.perm == lex_best);
        }
    }
}

TEST_CASE("assignment detects infeasibility") {
    CostMatrix m(3);
    // column 0 unreachable
    for (int r = 0; r < 3; ++r)
        for (int c = 1; c < 3; ++c) m.at(r, c) = 1;
    CHECK_FALSE(min_cost_assignment(m).feasible);
    CHECK_FALSE(min_cost_value(m).has_value());
}

TEST_CASE("one-in-two: empty two-block instance is unsatisfiable") {
    const OitmInstance inst = OitmInstance::decision(2, {});
    CHECK_FALSE(solve_one_in_two(inst).sat());
    CHECK_FALSE(brute_force_one_in_two(inst).sat());
}

TEST_CASE("one-in-two: a single cross-block 2-cycle is satisfiable") {
    const OitmInstance inst = OitmInstance::decision(2, {{0, 2, 0}, {2, 0, 0}});
    const OneInTwoResult res = solve_one_in_two(inst);
    REQUIRE(res.sat());
    CHECK(validate_solution(inst, *res.solution).valid);
    CHECK(brute_force_one_in_two(inst).sat());
}

TEST_CASE("one-in-two: worked weighted instance optimizes to cost 5") {
    const OitmInstance inst = test::worked_one_in_two_instance();
    const OneInTwoResult res = solve_one_in_two(inst);
    REQUIRE(res.solution.has_value());
    CHECK(res.outcome == SolveOutcome::Sat);  // 5 <= budget 10
    CHECK(res.cost == 5);                     // frozen by the brute-force oracle
    CHECK(res.solution->sigma == std::vector<std::uint8_t>{0, 0, 0});  // lowest sigma
    const ValidationReport rep = validate_solution(inst, *res.solution);
    CHECK(rep.valid);
    CHECK(rep.cost == 5);

    const OneInTwoResult brute = brute_force_one_in_two(inst);
    CHECK(brute.cost == 5);
}

TEST_CASE("one-in-two: a tight budget reports over-budget with the optimum") {
    const OitmInstance base = test::worked_one_in_two_instance();
    const OitmInstance tight =
        OitmInstance::weighted(base.block_count(), base.entries(), 4);
    for (const OneInTwoResult& res :
         {solve_one_in_two(tight), brute_force_one_in_two(tight)}) {
        CHECK(res.outcome == SolveOutcome::OverBudget);
        CHECK(res.cost == 5);
        REQUIRE(res.solution.has_value());
        CHECK(validate_solution(tight, *res.solution).valid);
    }
}

TEST_CASE("one-in-two: solver agrees with brute force on random instances") {
    std::mt19937 rng(23);
    int sat_seen = 0, unsat_seen = 0;
    for (int it = 0; it < 100; ++it) {
        const int B = 2 + static_cast<int>(rng() % 4);
        const bool weighted = it % 2 == 0;
        const OitmInstance inst =
            test::random_instance(rng, B, 0.25 + 0.1 * (rng() % 4), weighted, 9, 20);
        const OneInTwoResult fast = solve_one_in_two(inst);
        const OneInTwoResult brute = brute_force_one_in_two(inst);
        CHECK(fast.solution.has_value() == brute.solution.has_value());
        if (brute.solution) {
            ++sat_seen;
            CHECK(fast.outcome == brute.outcome);
            if (weighted) CHECK(fast.cost == brute.cost);
            CHECK(validate_solution(inst, *fast.solution).valid);
        } else {
            ++unsat_seen;
        }
    }
    CHECK(sat_seen > 10);
    CHECK(unsat_seen > 10);
}

TEST_CASE("one-in-two: the returned solution has the lowest feasible sigma") {
    // the determinism contract: among all valid star choices, the reported
    // one comes first in ascending binary order (block 1 most significant)
    std::mt19937 rng(25);
    auto sigma_rank = [](const std::vector<std::uint8_t>& sigma) {
        std::uint64_t r = 0;
        for (auto b : sigma) r = (r << 1) | b;
        return r;
    };
    int compared = 0;
    for (int it = 0; it < 60; ++it) {
        const int B = 2 + static_cast<int>(rng() % 4);
        const OitmInstance inst = test::random_instance(rng, B, 0.35, false);
        const OneInTwoResult fast = solve_one_in_two(inst);
        const OneInTwoResult brute = brute_force_one_in_two(inst);
        REQUIRE(fast.sat() == brute.sat());
        if (!fast.sat()) continue;
        ++compared;
        // the brute force scans masks in ascending order and stops at the
        // first valid one, so it is the ground truth for the contract
        CHECK(sigma_rank(fast.solution->sigma) == sigma_rank(brute.solution->sigma));
    }
    CHECK(compared > 15);
}

TEST_CASE("one-in-two: stress agreement with brute force at B up to 7") {
    std::mt19937 rng(26);
    int sat_seen = 0;
    for (int it = 0; it < 30; ++it) {
        const int B = 6 + static_cast<int>(rng() % 2);
        const bool weighted = it % 3 == 0;
        const OitmInstance inst =
            test::random_instance(rng, B, 0.15 + 0.05 * (rng() % 5), weighted, 9, 30);
        const OneInTwoResult fast = solve_one_in_two(inst);
        const OneInTwoResult brute = brute_force_one_in_two(inst, 7);
        REQUIRE(fast.solution.has_value() == brute.solution.has_value());
        REQUIRE(fast.outcome == brute.outcome);
        if (weighted) REQUIRE(fast.cost == brute.cost);
        if (fast.solution) {
            ++sat_seen;
            CHECK(validate_solution(inst, *fast.solution).valid);
        }
    }
    CHECK(sat_seen > 5);
}

TEST_CASE("one-in-two: enumeration cap raises a resource error") {
    const OitmInstance inst = OitmInstance::decision(30, {});
    CHECK_THROWS_AS(solve_one_in_two(inst), resource_error);
    CHECK_THROWS_AS(brute_force_one_in_two(inst), resource_error);
    SolveOptions opts;
    opts.enumeration_cap = 40;
    CHECK_FALSE(solve_one_in_two(inst, opts).sat());  // raised cap, clean unsat
}

TEST_CASE("one-in-four: forced 2-cycle example") {
    // block (1,2) entries {3,7,5,4}, block (2,1) entries {2,6,8,9}
    const OitmInstance inst = OitmInstance::weighted(
        2,
        {{0, 2, 3}, {0, 3, 7}, {1, 2, 5}, {1, 3, 4},
         {2, 0, 2}, {2, 1, 6}, {3, 0, 8}, {3, 1, 9}},
        100);
    const CostMatrix collapsed = one_in_four_collapse(inst);
    CHECK_FALSE(collapsed.allowed(0, 0));
    CHECK_FALSE(collapsed.allowed(1, 1));
    CHECK(*collapsed.at(0, 1) == 3);
    CHECK(*collapsed.at(1, 0) == 2);
    CHECK(solve_one_in_four(inst) == 5);
    CHECK(brute_force_one_in_four(inst) == 5);
}

TEST_CASE("one-in-four: constant blocks collapse to a constant matrix") {
    std::vector<Entry> entries;
    for (int bi = 0; bi < 3; ++bi)
        for (int bj = 0; bj < 3; ++bj) {
            if (bi == bj) continue;
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    entries.push_back({2 * bi + a, 2 * bj + b, 7});
        }
    const OitmInstance inst = OitmInstance::weighted(3, std::move(entries), 100);
    const CostMatrix collapsed = one_in_four_collapse(inst);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j)
                CHECK_FALSE(collapsed.allowed(i, j));
            else
                CHECK(*collapsed.at(i, j) == 7);
        }
    CHECK(solve_one_in_four(inst) == 21);
}

TEST_CASE("one-in-four: partially absent blocks keep only present entries") {
    const OitmInstance inst = OitmInstance::weighted(
        2, {{0, 2, 9}, {1, 3, 4}, {2, 0, 5}}, 100);
    const CostMatrix collapsed = one_in_four_collapse(inst);
    CHECK(*collapsed.at(0, 1) == 4);
    CHECK(*collapsed.at(1, 0) == 5);
    CHECK(solve_one_in_four(inst) == 9);
    CHECK(brute_force_one_in_four(inst) == 9);
}

TEST_CASE("one-in-four: collapse optimum equals exhaustive optimum") {
    std::mt19937 rng(24);
    int feasible = 0;
    for (int it = 0; it < 20; ++it) {
        const OitmInstance inst = test::random_instance(rng, 4, 0.5, true, 9, 50);
        const auto fast = solve_one_in_four(inst);
        const auto brute = brute_force_one_in_four(inst);
        CHECK(fast == brute);
        feasible += fast.has_value();
    }
    CHECK(feasible > 5);
}
