#include <benchmark/benchmark.h>

#include "rcanon/batch.hpp"

using namespace rcanon;

namespace {

std::vector<GeneratorSpec> specs(std::size_t count, int dim) {
    const CaseKind kinds[] = {CaseKind::a1, CaseKind::a2, CaseKind::a3, CaseKind::b1, CaseKind::b2,
                              CaseKind::c1, CaseKind::c2, CaseKind::c3, CaseKind::c4};
    std::vector<GeneratorSpec> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i].case_tag = {kinds[i % 9], i % 2 ? 3 : -2};
        out[i].dimension = dim;
    }
    return out;
}

std::vector<MatrixPair> pairs(std::size_t count, int dim) {
    std::vector<MatrixPair> out;
    for (auto& g : generate_batch(specs(count, dim), 1, Execution::Serial))
        out.push_back(std::move(g.value->pair));
    return out;
}

void BM_canonicalize(benchmark::State& state, Execution exec) {
    const auto ps = pairs(256, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(canonicalize_batch(ps, exec));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(ps.size()));
}

void BM_generate(benchmark::State& state, Execution exec) {
    const auto ss = specs(256, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(generate_batch(ss, 7, exec));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(ss.size()));
}

void BM_validate(benchmark::State& state, Execution exec) {
    const auto ps = pairs(256, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(validate_batch(ps, exec));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(ps.size()));
}

} // namespace

BENCHMARK_CAPTURE(BM_canonicalize, serial, Execution::Serial)->Arg(4)->Arg(8);
BENCHMARK_CAPTURE(BM_canonicalize, parallel, Execution::Parallel)->Arg(4)->Arg(8);
BENCHMARK_CAPTURE(BM_generate, serial, Execution::Serial)->Arg(8);
BENCHMARK_CAPTURE(BM_generate, parallel, Execution::Parallel)->Arg(8);
BENCHMARK_CAPTURE(BM_validate, serial, Execution::Serial)->Arg(8);
BENCHMARK_CAPTURE(BM_validate, parallel, Execution::Parallel)->Arg(8);

BENCHMARK_MAIN();
