#include "seasons/controller.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "seasons/errors.hpp"

namespace seasons {

double sustainable_dequeue_rate(double harvest_power_w, const TaskCosts& costs,
                                double budget_rate, double f_max_hz) {
  costs.validate();
  if (!(budget_rate > 0.0) || budget_rate > 1.0)
    throw InputError("budget rate must be in (0, 1]");
  if (!(f_max_hz > 0.0)) throw InputError("f_max must be > 0");
  const double sampling_w = budget_rate * f_max_hz * costs.sample_j;
  const double d = (harvest_power_w - sampling_w) / costs.service_j();
  if (!(d > 0.0))
    throw ConfigError("infeasible budget: harvest " +
                      std::to_string(harvest_power_w) +
                      " W cannot sustain sampling at rate " +
                      std::to_string(budget_rate) + " plus any dequeues");
  return d;
}

std::size_t critical_count_for_rate(double dequeue_rate, double latency_s) {
  if (!(dequeue_rate > 0.0)) throw ConfigError("dequeue rate must be > 0");
  if (!(latency_s > 0.0)) throw InputError("latency must be > 0");
  // The slack keeps exact products such as 30/s * 1 s from flooring to 29.
  const double count = std::floor(dequeue_rate * latency_s + 1e-9);
  return std::max<std::size_t>(1, static_cast<std::size_t>(count));
}

std::size_t critical_count(double harvest_power_w, const TaskCosts& costs,
                           double budget_rate, double f_max_hz,
                           double latency_s) {
  return critical_count_for_rate(
      sustainable_dequeue_rate(harvest_power_w, costs, budget_rate, f_max_hz),
      latency_s);
}

double default_guard_samples(const TaskCosts& costs) {
  costs.validate();
  return 2.0 + 2.0 * costs.sample_j / costs.service_j();
}

ControllerState make_controller_state(double harvest_power_w,
                                      const TaskCosts& costs,
                                      double budget_rate, double f_max_hz,
                                      double latency_s,
                                      double release_fraction,
                                      std::optional<double> guard_samples) {
  if (!(release_fraction > 0.0) || release_fraction > 1.0)
    throw InputError("release_fraction must be in (0, 1]");
  const double guard = guard_samples.value_or(default_guard_samples(costs));
  if (!(guard >= 0.0)) throw InputError("guard must be >= 0");

  ControllerState s;
  s.dequeue_rate_sustainable =
      sustainable_dequeue_rate(harvest_power_w, costs, budget_rate, f_max_hz);
  s.critical_count =
      critical_count_for_rate(s.dequeue_rate_sustainable, latency_s);
  const double room = s.dequeue_rate_sustainable * latency_s - guard;
  s.latch_count =
      room > 0.0 ? static_cast<std::size_t>(std::floor(room + 1e-9)) : 0;
  s.release_fraction = release_fraction;
  return s;
}

double safe_rate(double requested, std::size_t queue_len,
                 ControllerState& state, double f_max_hz) {
  if (!(requested > 0.0) || requested > 1.0)
    throw InputError("requested rate must be in (0, 1]");

  const double q = static_cast<double>(queue_len);
  if (queue_len >= state.latch_count) {
    if (!state.in_critical) ++state.critical_entries;
    state.in_critical = true;
  } else if (state.in_critical &&
             q < static_cast<double>(state.latch_count) *
                     state.release_fraction) {
    state.in_critical = false;
  }
  if (!state.in_critical) return requested;

  const double cap = std::min(1.0, state.dequeue_rate_sustainable / f_max_hz);
  return std::min(requested, cap);
}

}  // namespace seasons
