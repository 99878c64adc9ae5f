// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <string>

#include "taf/absorbing.hpp"
#include "taf/presentation.hpp"

namespace {

bool prime_number(int64_t n) {
  for (int64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return n > 1;
}

// (0) in Z/p x Z/q is TA, so the witness search runs to exhaustion over the
// p + q - 1 nonunits; q is the next prime after p.
taf::CosetTable exhaustive_table(int64_t p) {
  int64_t q = p + 1;
  while (!prime_number(q)) ++q;
  const taf::FiniteRing r =
      taf::construct(taf::parse_ringspec("Z/" + std::to_string(p) + " x Z/" + std::to_string(q)));
  return taf::coset_table(r, taf::ideal_zero(r));
}

void BM_WitnessSerial(benchmark::State& state) {
  const auto t = exhaustive_table(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(taf::find_ta_witness_serial(t));
}

void BM_WitnessParallel(benchmark::State& state) {
  const auto t = exhaustive_table(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(taf::find_ta_witness_parallel(t));
}

void BM_PrincipalSerial(benchmark::State& state) {
  const taf::FiniteRing r = taf::construct(taf::parse_ringspec("Z/" + std::to_string(state.range(0)) + " x Z/8"));
  for (auto _ : state) benchmark::DoNotOptimize(taf::principal_ideals_serial(r));
}

void BM_PrincipalParallel(benchmark::State& state) {
  const taf::FiniteRing r = taf::construct(taf::parse_ringspec("Z/" + std::to_string(state.range(0)) + " x Z/8"));
  for (auto _ : state) benchmark::DoNotOptimize(taf::principal_ideals(r));
}

}  // namespace

BENCHMARK(BM_WitnessSerial)->Arg(31)->Arg(47)->Arg(61)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WitnessParallel)->Arg(31)->Arg(47)->Arg(61)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PrincipalSerial)->Arg(27)->Arg(81)->Arg(243)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PrincipalParallel)->Arg(27)->Arg(81)->Arg(243)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
