#include <benchmark/benchmark.h>

#include <random>

#include "oitm/classify.hpp"
#include "oitm/encode.hpp"
#include "oitm/factor_graph.hpp"
#include "oitm/gadgets.hpp"
#include "oitm/one_in_two.hpp"
#include "oitm/tdm.hpp"

namespace {

using namespace oitm;

Cnf random_3cnf(std::mt19937& rng, int nv, int nc) {
    Cnf cnf;
    cnf.num_vars = nv;
    std::uniform_int_distribution<int> var(1, nv);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int c = 0; c < nc; ++c) {
        std::vector<int> vars;
        while (static_cast<int>(vars.size()) < 3) {
            int v = var(rng);
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
        }
        std::vector<int> clause;
        for (int v : vars) clause.push_back(sign(rng) ? v : -v);
        cnf.clauses.push_back(clause);
    }
    return cnf;
}

void BM_EncodeCnf(benchmark::State& state) {
    std::mt19937 rng(1);
    const Cnf cnf = random_3cnf(rng, static_cast<int>(state.range(0)),
                                static_cast<int>(state.range(0)) * 3);
    const FactorGraph fg = build_factor_graph(cnf);
    for (auto _ : state) {
        benchmark::DoNotOptimize(encode(fg));
    }
}
BENCHMARK(BM_EncodeCnf)->Arg(8)->Arg(16)->Arg(32);

void BM_SolveEncodedCnf(benchmark::State& state) {
    std::mt19937 rng(2);
    const Cnf cnf = random_3cnf(rng, static_cast<int>(state.range(0)),
                                static_cast<int>(state.range(0)));
    const Encoding enc = encode(build_factor_graph(cnf));
    SolveOptions opts;
    opts.enumeration_cap = 256;
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_one_in_two(enc.instance, opts));
    }
}
BENCHMARK(BM_SolveEncodedCnf)->Arg(6)->Arg(8)->Arg(10);

void BM_TruthTableExtraction(benchmark::State& state) {
    const GadgetMatrix g = gadgets::range_t(static_cast<int>(state.range(0)), 1,
                                            static_cast<int>(state.range(0)) - 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gadgets::truth_table_of(g));
    }
}
BENCHMARK(BM_TruthTableExtraction)->Arg(4)->Arg(6)->Arg(8);

void BM_Signature(benchmark::State& state) {
    const TruthTable t = TruthTable::from_index(4, 9435);
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify::signature(t));
    }
}
BENCHMARK(BM_Signature);

void BM_Canonical(benchmark::State& state) {
    const TruthTable t = TruthTable::from_index(4, 9435);
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify::canonical(t));
    }
}
BENCHMARK(BM_Canonical);

void BM_ReduceTo3dm(benchmark::State& state) {
    std::mt19937 rng(3);
    const Cnf cnf = random_3cnf(rng, 10, 20);
    const Encoding enc = encode(build_factor_graph(cnf));
    for (auto _ : state) {
        benchmark::DoNotOptimize(tdm::reduce_to_3dm(enc.instance));
    }
}
BENCHMARK(BM_ReduceTo3dm);

}  // namespace

BENCHMARK_MAIN();
