#include <benchmark/benchmark.h>

#include "lucassq/arith.hpp"
#include "lucassq/lucas.hpp"
#include "lucassq/periods.hpp"

namespace {

using namespace lucassq;

const LucasParams kFib{1, -1};

void BM_u_rec(benchmark::State& state)
{
    const auto n = static_cast<SequenceIndex>(state.range(0));
    for (auto _ : state) {
        auto v = u_rec(kFib, n);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_u_rec)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_u_closed(benchmark::State& state)
{
    const auto n = static_cast<SequenceIndex>(state.range(0));
    for (auto _ : state) {
        auto v = u_closed(kFib, n);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_u_closed)->Arg(1000)->Arg(4000);

void BM_u_matrix(benchmark::State& state)
{
    const auto n = static_cast<SequenceIndex>(state.range(0));
    for (auto _ : state) {
        auto v = u_matrix(kFib, n);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_u_matrix)->Arg(1000)->Arg(100000)->Arg(1000000);

void BM_u_mod(benchmark::State& state)
{
    const auto n = static_cast<SequenceIndex>(state.range(0));
    for (auto _ : state) {
        auto r = u_mod(kFib, n, 4);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_u_mod)->Arg(1000000)->Arg(1000000000000);

void BM_isqrt(benchmark::State& state)
{
    BigInt x = u_rec(kFib, static_cast<SequenceIndex>(state.range(0)));
    x = x * x + 1;
    for (auto _ : state) {
        auto s = arith::isqrt(x);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_isqrt)->Arg(100)->Arg(1000)->Arg(10000);

void BM_period_mod(benchmark::State& state)
{
    const auto m = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto info = period_mod(kFib, m);
        benchmark::DoNotOptimize(info);
    }
}
BENCHMARK(BM_period_mod)->Arg(4)->Arg(1024)->Arg(65536);

} // namespace

BENCHMARK_MAIN();
