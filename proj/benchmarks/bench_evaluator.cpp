#include <benchmark/benchmark.h>

#include <random>

#include "seasons/evaluator.hpp"

namespace {

void BM_Reconstruct(benchmark::State& state) {
  const auto horizon = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::normal_distribution<double> val;
  seasons::ReceivedLog log;
  std::vector<double> truth(horizon);
  for (std::size_t t = 0; t < horizon; ++t) {
    truth[t] = val(rng);
    if (t % 3 != 1) log.entries.emplace_back(static_cast<seasons::Tick>(t), truth[t]);
  }
  for (auto _ : state) {
    const auto r = seasons::reconstruct(log, horizon);
    benchmark::DoNotOptimize(seasons::mae(r, truth));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Reconstruct)->Range(1 << 10, 1 << 18);

}  // namespace
