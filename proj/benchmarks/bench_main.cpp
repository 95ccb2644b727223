#include <benchmark/benchmark.h>

#include <vector>

#include "mvalg/completion.hpp"
#include "mvalg/ideals.hpp"
#include "mvalg/symbolic.hpp"

namespace {

using namespace mvalg;

// Products L_k^r with k^r roughly the benchmark argument.
std::vector<int> orders_for(int64_t shape) {
  switch (shape) {
    case 0: return {2, 3};
    case 1: return {3, 4, 5};
    case 2: return {5, 5, 5};
    case 3: return {4, 4, 4, 4};
    case 4: return {8, 8, 8};
    default: return {8, 8, 8, 8};
  }
}

void BM_FromTables(benchmark::State& state) {
  const FiniteMVAlgebra a = product_of_chains(orders_for(state.range(0)));
  const auto table = a.oplus_table();
  for (auto _ : state) {
    benchmark::DoNotOptimize(FiniteMVAlgebra::from_tables(a.size(), a.zero(), table, a.neg_table()));
  }
  state.counters["size"] = static_cast<double>(a.size());
}
BENCHMARK(BM_FromTables)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
  const FiniteMVAlgebra a = product_of_chains(orders_for(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(a));
  state.counters["size"] = static_cast<double>(a.size());
}
BENCHMARK(BM_Decompose)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_AllIdeals(benchmark::State& state) {
  const FiniteMVAlgebra a = product_of_chains(orders_for(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_ideals(a));
  state.counters["size"] = static_cast<double>(a.size());
}
BENCHMARK(BM_AllIdeals)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_ClassifyAll(benchmark::State& state) {
  const FiniteMVAlgebra a = product_of_chains(orders_for(state.range(0)));
  const auto ideals = all_ideals(a);
  for (auto _ : state) {
    for (const Ideal& i : ideals) benchmark::DoNotOptimize(classify(a, i));
  }
  state.counters["ideals"] = static_cast<double>(ideals.size());
}
BENCHMARK(BM_ClassifyAll)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_ProfiniteCompletion(benchmark::State& state) {
  const FiniteMVAlgebra a = product_of_chains(orders_for(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(profinite_completion(a));
  state.counters["size"] = static_cast<double>(a.size());
}
BENCHMARK(BM_ProfiniteCompletion)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_UltrafilterLimit(benchmark::State& state) {
  IndexSpec spec;
  spec.period = 2;
  spec.classes = {ConstLaw{2}, UnboundedLaw{2, 2}};
  const SymbolicElement f{6, {{3, 1}}, {1, Extreme::Top, 0, Extreme::Zero, 1, Extreme::Top}};
  const SymbolicElement g{4, {}, {0, Extreme::Top, 1, Extreme::Zero}};
  const SymbolicUltrafilter u = FreeUltrafilter{1, 8};
  for (auto _ : state) benchmark::DoNotOptimize(ultrafilter_limit(spec, oplus(spec, f, g), u));
}
BENCHMARK(BM_UltrafilterLimit);

}  // namespace

BENCHMARK_MAIN();
