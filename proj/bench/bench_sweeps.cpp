#include "gitstab/sweep.hpp"

#include <benchmark/benchmark.h>

using namespace gitstab;

namespace {

Execution exec_of(const benchmark::State& s) { return s.range(0) ? Execution::Parallel : Execution::Serial; }

void BM_CornerFamily(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_corner_family(2, exec_of(state)));
}
BENCHMARK(BM_CornerFamily)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(census(2, true, exec_of(state)));
}
BENCHMARK(BM_Census)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_FlagEnumeration(benchmark::State& state)
{
    const Field f = Field::prime(3);
    MarkedMap mm(ProjectiveMatrix(Matrix::from_ints(f, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}})),
                 {Vector{f.one(), f.zero(), f.zero()}, Vector{f.one(), f.one(), f.zero()}});
    Sheaf s = Sheaf::uniform(1, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(check_stability(mm, s, Mode::Exact, 1000000, exec_of(state)));
}
BENCHMARK(BM_FlagEnumeration)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state)
{
    const Field f = Field::prime(2);
    MarkedMap mm(ProjectiveMatrix(Matrix::from_ints(f, {{0, 0, 1}, {1, 0, 1}, {0, 1, 0}})),
                 {Vector{f.one(), f.zero(), f.zero()}});
    for (auto _ : state)
        benchmark::DoNotOptimize(
            hilbert_mumford_oracle(mm, Sheaf::uniform(1, 1), OracleBases::AllBases, 2000000, exec_of(state)));
}
BENCHMARK(BM_Oracle)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
