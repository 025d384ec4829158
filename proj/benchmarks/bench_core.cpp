#include <benchmark/benchmark.h>

#include "fidest/optimizer/basis_score.hpp"
#include "fidest/optimizer/catalog.hpp"
#include "fidest/optimizer/qubit_optimizer.hpp"
#include "fidest/quantum/haar.hpp"
#include "fidest/quantum/permanent.hpp"
#include "fidest/simulator/protocol.hpp"

using namespace fidest;

namespace {

MeasurementRecord random_record(std::size_t d, std::size_t k, std::uint64_t seed) {
  RandomSource rng(seed);
  MeasurementRecord r(d);
  for (std::size_t i = 0; i < k; ++i) r.append(haar_random_state(d, rng));
  return r;
}

void BM_Permanent(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RandomSource rng(1);
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = {rng.uniform() - 0.5, rng.uniform() - 0.5};
  for (auto _ : state) benchmark::DoNotOptimize(permanent(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Permanent)->DenseRange(4, 20, 4);

void BM_BasisScoreQubit(benchmark::State& state) {
  const auto rec = random_record(2, static_cast<std::size_t>(state.range(0)), 2);
  RandomSource rng(3);
  const auto basis = haar_random_basis(2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(basis_score(rec, basis));
}
BENCHMARK(BM_BasisScoreQubit)->Arg(4)->Arg(8)->Arg(12)->Arg(20);

void BM_CatalogTwoQubit(benchmark::State& state) {
  const auto rec = random_record(4, static_cast<std::size_t>(state.range(0)), 4);
  const auto catalog = local_pauli_catalog();
  for (auto _ : state) benchmark::DoNotOptimize(optimize_from_catalog(rec, catalog));
}
BENCHMARK(BM_CatalogTwoQubit)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_QubitOptimizer(benchmark::State& state) {
  const auto rec = random_record(2, static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) {
    RandomSource rng(6);
    benchmark::DoNotOptimize(optimize_qubit_basis(rec, rng));
  }
}
BENCHMARK(BM_QubitOptimizer)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_AdaptiveProtocol(benchmark::State& state) {
  RandomSource hrng(7);
  const auto hidden = haar_random_state(2, hrng);
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(run_protocol(hidden, Strategy::adaptive(), StoppingRule::iteration_cap(k), RandomSource(8)));
}
BENCHMARK(BM_AdaptiveProtocol)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
