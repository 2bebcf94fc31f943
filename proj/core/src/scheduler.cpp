#include "seasons/scheduler.hpp"

#include <algorithm>
#include <cmath>

#include "seasons/errors.hpp"

namespace seasons {

TickPlan Scheduler::plan_tick(double safe_rate, const EnergyState& energy,
                              const TaskCosts& costs, std::size_t queue_len) {
  if (!(safe_rate > 0.0) || safe_rate > 1.0)
    throw InputError("safe rate must be in (0, 1]");

  // Starting one rate step short of a full credit makes the first tick sample
  // and reproduces uniform_decide() exactly for a constant rate.
  if (!primed_) {
    credit_ = 1.0 - safe_rate;
    primed_ = true;
  }

  TickPlan plan;
  credit_ += safe_rate;
  if (credit_ >= 1.0 - 1e-9) {
    const bool admitted =
        !config_.admission_horizon_s ||
        energy.charge_j - costs.sample_j +
                energy.harvest_power_w * *config_.admission_horizon_s >=
            static_cast<double>(queue_len + 1) * costs.service_j();
    if (admitted) {
      plan.take_sample = true;
      credit_ = std::max(0.0, credit_ - 1.0);
    } else {
      credit_ = std::min(credit_, 1.0);
    }
  }

  const std::size_t pending = queue_len + (plan.take_sample ? 1 : 0);
  const double spare =
      energy.charge_j - (plan.take_sample ? costs.sample_j : 0.0);
  if (pending > 0 && spare > 0.0) {
    const double affordable = std::floor(spare / costs.service_j());
    plan.n_dequeues = std::min(pending, static_cast<std::size_t>(affordable));
  }
  const std::size_t cap =
      config_.max_dequeues_per_tick.value_or(static_cast<std::size_t>(-1));
  plan.n_dequeues = std::min(plan.n_dequeues, cap);

  if (config_.surplus_sampling && !plan.take_sample &&
      plan.n_dequeues == pending && plan.n_dequeues < cap) {
    const double left = energy.charge_j - static_cast<double>(plan.n_dequeues) *
                                              costs.service_j();
    const double incoming = energy.harvest_power_w * config_.tick_period_s;
    if (left >= costs.pipeline_j() && left + incoming > energy.capacity_j) {
      plan.take_sample = true;
      plan.surplus = true;
      ++plan.n_dequeues;
    }
  }
  return plan;
}

}  // namespace seasons
