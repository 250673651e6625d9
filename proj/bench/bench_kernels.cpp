#include <benchmark/benchmark.h>

#include <vector>

#include "schurdex/cli.hpp"
#include "schurdex/kernels.hpp"

using namespace schurdex;

namespace {

// Defining groups of growing order: C_n ⋊ C_2 × C_2 with inversion and x ↦ x^{1+n/2}.
PresentedGroup group_of_size(std::int64_t n) {
    return PresentedGroup(n, {{2, n - 1, 0}, {2, n / 2 + 1, 0}}, {{0}});
}

void BM_SquareCensusSerial(benchmark::State& state) {
    const auto G = group_of_size(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::square_census_serial(G));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(G.order()));
}

void BM_SquareCensusParallel(benchmark::State& state) {
    const auto G = group_of_size(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::square_census_parallel(G));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(G.order()));
}

void BM_CommutatorSetSerial(benchmark::State& state) {
    const auto G = group_of_size(state.range(0));
    const auto all = whole_group(G);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::commutator_set_serial(G, all));
}

void BM_CommutatorSetParallel(benchmark::State& state) {
    const auto G = group_of_size(state.range(0));
    const auto all = whole_group(G);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::commutator_set_parallel(G, all));
}

std::vector<std::string> batch_inputs() {
    std::vector<std::string> out;
    for (int i = 0; i < 8; ++i) {
        out.push_back("[1,Q,12,[[2,5,9],[2,7,0]],[[9]]]");
        out.push_back("[1,Q,12,[[2,5,3],[2,7,6]],[[3]]]");
        out.push_back("[1,Q,4,[2,3,2]]");
    }
    return out;
}

void BM_IndexBatchSerial(benchmark::State& state) {
    const auto inputs = batch_inputs();
    for (auto _ : state)
        for (const auto& s : inputs) benchmark::DoNotOptimize(cli::run(cli::Command::Index, s));
}

void BM_IndexBatchParallel(benchmark::State& state) {
    const auto inputs = batch_inputs();
    for (auto _ : state) benchmark::DoNotOptimize(cli::run_batch(cli::Command::Index, inputs));
}

}  // namespace

BENCHMARK(BM_SquareCensusSerial)->Arg(64)->Arg(512)->Arg(4096);
BENCHMARK(BM_SquareCensusParallel)->Arg(64)->Arg(512)->Arg(4096);
BENCHMARK(BM_CommutatorSetSerial)->Arg(16)->Arg(64)->Arg(128);
BENCHMARK(BM_CommutatorSetParallel)->Arg(16)->Arg(64)->Arg(128);
BENCHMARK(BM_IndexBatchSerial);
BENCHMARK(BM_IndexBatchParallel);

BENCHMARK_MAIN();
