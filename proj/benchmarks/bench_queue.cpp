#include <benchmark/benchmark.h>

#include "seasons/sample_queue.hpp"

namespace {

// Steady churn: one enqueue, one expiry check, one dequeue per tick with a
// queue holding `range(0)` samples.
void BM_QueueChurn(benchmark::State& state) {
  const auto depth = static_cast<seasons::Tick>(state.range(0));
  seasons::SampleQueue q(0.02);
  seasons::Tick t = 0;
  for (; t < depth; ++t) (void)q.enqueue({t, 0.0, t + 10 * depth});
  for (auto _ : state) {
    (void)q.enqueue({t, 0.0, t + 10 * depth});
    benchmark::DoNotOptimize(q.drop_expired(t));
    benchmark::DoNotOptimize(q.dequeue_oldest(t));
    benchmark::DoNotOptimize(q.dynamics(1.0));
    ++t;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_QueueChurn)->Arg(1)->Arg(64)->Arg(4096);

}  // namespace
