#include <benchmark/benchmark.h>

#include "eqg/algorithms.hpp"
#include "eqg/enhanced.hpp"
#include "eqg/families.hpp"
#include "eqg/verifier.hpp"

namespace {

void BM_EnhancedPowerGraph(benchmark::State& state) {
  const auto g = eqg::make_group("symmetric:4 x cyclic:2");
  for (auto _ : state) benchmark::DoNotOptimize(eqg::enhanced_power_graph(g));
}
BENCHMARK(BM_EnhancedPowerGraph);

void BM_EnhancedQuotientGraph(benchmark::State& state) {
  const auto g = eqg::make_group("dicyclic:12");
  const auto h = eqg::center(g);
  for (auto _ : state) benchmark::DoNotOptimize(eqg::enhanced_quotient_graph(g, h));
}
BENCHMARK(BM_EnhancedQuotientGraph);

void BM_NormalSubgroups(benchmark::State& state) {
  const auto g = eqg::make_group("symmetric:4");
  for (auto _ : state) benchmark::DoNotOptimize(eqg::normal_subgroups(g));
}
BENCHMARK(BM_NormalSubgroups);

void BM_CliqueNumber(benchmark::State& state) {
  const auto g = eqg::enhanced_power_graph(eqg::make_group(state.range(0) == 0 ? "symmetric:4" : "dihedral:12"));
  for (auto _ : state) benchmark::DoNotOptimize(eqg::clique_number(g));
}
BENCHMARK(BM_CliqueNumber)->Arg(0)->Arg(1);

void BM_HamiltonianCycle(benchmark::State& state) {
  const auto g = eqg::enhanced_power_graph(eqg::make_group("cyclic:2 x cyclic:10"));
  for (auto _ : state) benchmark::DoNotOptimize(eqg::hamiltonian_cycle(g, 24));
}
BENCHMARK(BM_HamiltonianCycle);

void BM_Circumference(benchmark::State& state) {
  const auto g = eqg::deleted(eqg::enhanced_power_graph(eqg::make_group("dihedral:7")));
  for (auto _ : state) benchmark::DoNotOptimize(eqg::circumference(g));
}
BENCHMARK(BM_Circumference);

void BM_Planarity(benchmark::State& state) {
  const auto g = eqg::enhanced_power_graph(eqg::make_group("symmetric:4"));
  for (auto _ : state) benchmark::DoNotOptimize(eqg::is_planar(g));
}
BENCHMARK(BM_Planarity);

void BM_SweepAllClaims(benchmark::State& state) {
  const auto catalog = eqg::default_catalog(static_cast<std::size_t>(state.range(0)));
  eqg::SweepOptions o;
  o.claims = eqg::select_claims("all");
  for (auto _ : state) benchmark::DoNotOptimize(eqg::sweep(catalog, o));
}
BENCHMARK(BM_SweepAllClaims)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
