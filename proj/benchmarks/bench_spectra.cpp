#include <benchmark/benchmark.h>

#include "stabscope/sampler.hpp"
#include "stabscope/spectra.hpp"
#include "stabscope/stabset.hpp"
#include "stabscope/state.hpp"

using namespace stabscope;

namespace {

StateVector make_state(int n) {
  Rng rng(1234);
  return haar_random(n, rng);
}

void BM_WalshHadamard(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<double> values(std::size_t{1} << (2 * n));
  Rng rng(1);
  for (auto& v : values) v = rng.uniform();
  for (auto _ : state) {
    walsh_hadamard(std::span<double>(values));
    benchmark::DoNotOptimize(values.data());
  }
}
BENCHMARK(BM_WalshHadamard)->Arg(4)->Arg(6)->Arg(8);

void BM_CharacteristicTableNaive(benchmark::State& state) {
  StateVector psi = make_state(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    DistributionTable p = characteristic_table(psi);
    benchmark::DoNotOptimize(p.values.data());
  }
}
BENCHMARK(BM_CharacteristicTableNaive)->Arg(4)->Arg(6)->Arg(8);

void BM_CharacteristicTableFast(benchmark::State& state) {
  StateVector psi = make_state(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    DistributionTable p = characteristic_table_fast(psi);
    benchmark::DoNotOptimize(p.values.data());
  }
}
BENCHMARK(BM_CharacteristicTableFast)->Arg(4)->Arg(6)->Arg(8)->Arg(10);

void BM_WeylDistribution(benchmark::State& state) {
  DistributionTable p =
      characteristic_table_fast(make_state(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    DistributionTable q = weyl_distribution(p);
    benchmark::DoNotOptimize(q.values.data());
  }
}
BENCHMARK(BM_WeylDistribution)->Arg(4)->Arg(6)->Arg(8)->Arg(10);

void BM_EstimateEta(benchmark::State& state) {
  StateVector psi = make_state(8);
  Rng rng(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_eta(psi, state.range(0), rng));
  }
}
BENCHMARK(BM_EstimateEta)->Arg(100)->Arg(1000);

void BM_StabilizerFidelity(benchmark::State& state) {
  StateVector psi = make_state(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(stabilizer_fidelity(psi));
  }
}
BENCHMARK(BM_StabilizerFidelity)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
