#include <benchmark/benchmark.h>

#include "disq/protocol.hpp"
#include "disq/statevec.hpp"

namespace {

using namespace disq;

void BM_InverseQft(benchmark::State& state) {
    const int t = static_cast<int>(state.range(0));
    auto s = StateVector::basis(RegisterLayout{{"A", t}, {"C", 4}}, {{"C", 1}});
    s.apply_hadamard("A");
    for (auto _ : state) {
        s.apply_inverse_qft("A");
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (t + 4)));
}
BENCHMARK(BM_InverseQft)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void BM_ControlledModmul(benchmark::State& state) {
    const int t = static_cast<int>(state.range(0));
    auto s = StateVector::basis(RegisterLayout{{"A", t}, {"C", 6}}, {{"C", 1}});
    s.apply_hadamard("A");
    for (auto _ : state) {
        s.apply_controlled_modmul("A", "C", 2, 33);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (t + 6)));
}
BENCHMARK(BM_ControlledModmul)->DenseRange(8, 14, 3)->Unit(benchmark::kMillisecond);

void BM_DistributedShot(benchmark::State& state) {
    const auto params = ProtocolParams::make(static_cast<std::uint64_t>(state.range(0)), 2, Rational(1, 4));
    Rng rng(1);
    for (auto _ : state) benchmark::DoNotOptimize(run_distributed_order_finding(params, rng));
}
BENCHMARK(BM_DistributedShot)->Arg(15)->Arg(33)->Unit(benchmark::kMillisecond);

void BM_MonolithicShot(benchmark::State& state) {
    const auto params = ProtocolParams::make(static_cast<std::uint64_t>(state.range(0)), 2, Rational(1, 4));
    Rng rng(1);
    for (auto _ : state) benchmark::DoNotOptimize(run_monolithic_order_finding(params, rng));
}
BENCHMARK(BM_MonolithicShot)->Arg(15)->Arg(33)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
