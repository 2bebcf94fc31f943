#include <benchmark/benchmark.h>

#include "seasons/sim_engine.hpp"
#include "seasons/signal_source.hpp"

namespace {

void BM_Run(benchmark::State& state) {
  seasons::RunConfig c;
  c.mode = static_cast<seasons::Mode>(state.range(0));
  c.ground_truth = seasons::gen_two_phase_cycles(150, 150, 1.0, 25, 10, 1);
  c.latency_s = 2.0;
  for (auto _ : state) benchmark::DoNotOptimize(seasons::run(c).mae);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.ground_truth.size()));
  state.SetLabel(std::string(seasons::to_string(c.mode)));
}
BENCHMARK(BM_Run)->DenseRange(0, 3);

}  // namespace
