#pragma once

#include <cstddef>
#include <optional>

#include "seasons/energy_model.hpp"

namespace seasons {

struct TickPlan {
  bool take_sample = false;
  bool surplus = false;  // sample paid for by charge that would overflow
  std::size_t n_dequeues = 0;

  friend bool operator==(const TickPlan&, const TickPlan&) = default;
};

struct SchedulerConfig {
  std::optional<std::size_t> max_dequeues_per_tick;  // unbounded when empty
  // With the queue drained and the capacitor about to overflow on the next
  // harvest, take (and send) one extra sample instead of losing the energy.
  bool surplus_sampling = false;
  double tick_period_s = 0.02;
  // When set, a due sample waits until the charge plus the harvest over this
  // horizon covers sampling it and serving everything queued ahead of it.
  std::optional<double> admission_horizon_s;
};

/// Time-buffered scheduling. Sampling follows the safe rate through a rate
/// credit accumulator and has strict priority; whatever charge is left moves
/// queued samples to the server, as many as it affords.
class Scheduler {
 public:
  explicit Scheduler(SchedulerConfig config = {}) : config_(config) {}

  // `queue_len` is the queue length before this tick's sample. A sample taken
  // this tick may be dequeued in the same tick.
  TickPlan plan_tick(double safe_rate, const EnergyState& energy,
                     const TaskCosts& costs, std::size_t queue_len);

  [[nodiscard]] double credit() const noexcept { return credit_; }

 private:
  SchedulerConfig config_;
  double credit_ = 0.0;
  bool primed_ = false;
};

}  // namespace seasons
