#include "seasons/energy_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "seasons/errors.hpp"

namespace seasons {

void TaskCosts::validate() const {
  if (!(sample_j > 0.0) || !(process_j > 0.0) || !(transmit_j > 0.0))
    throw InputError("task costs must all be > 0");
}

TaskCosts derive_costs(const TablePowers& powers, double samples_per_window,
                       double window_s) {
  if (!(powers.sampling_w > 0.0) || !(powers.encryption_w > 0.0) ||
      !(powers.ble_w > 0.0))
    throw InputError("stage powers must all be > 0");
  if (!(samples_per_window > 0.0))
    throw InputError("samples_per_window must be > 0");
  if (!(window_s > 0.0)) throw InputError("window must be > 0");

  const auto per_sample = [&](double watts) {
    return watts * window_s / samples_per_window;
  };
  return {per_sample(powers.sampling_w), per_sample(powers.encryption_w),
          per_sample(powers.ble_w)};
}

EnergyState harvest(const EnergyState& state, double dt_s) {
  if (!(dt_s > 0.0)) throw InputError("harvest interval must be > 0");
  EnergyState next = state;
  next.charge_j =
      std::min(state.capacity_j, state.charge_j + state.harvest_power_w * dt_s);
  return next;
}

ConsumeResult try_consume(const EnergyState& state, double cost_j) {
  if (!(cost_j >= 0.0)) throw InputError("energy cost must be >= 0");
  if (state.charge_j < cost_j) return {state, false};
  EnergyState next = state;
  next.charge_j = state.charge_j - cost_j;
  return {next, true};
}

double budget_to_power(double collection_rate, const TaskCosts& costs,
                       double f_max_hz) {
  if (!(collection_rate > 0.0) || collection_rate > 1.0)
    throw InputError("collection rate must be in (0, 1], got " +
                     std::to_string(collection_rate));
  if (!(f_max_hz > 0.0)) throw InputError("f_max must be > 0");
  return collection_rate * f_max_hz * costs.pipeline_j();
}

EnergyStore::EnergyStore(const EnergyState& initial)
    : state_(initial), initial_j_(initial.charge_j) {
  if (!(initial.capacity_j > 0.0)) throw InputError("capacity must be > 0");
  if (!(initial.charge_j >= 0.0) || initial.charge_j > initial.capacity_j)
    throw InputError("initial charge must lie in [0, capacity]");
  if (!(initial.harvest_power_w >= 0.0))
    throw InputError("harvest power must be >= 0");
}

void EnergyStore::harvest(double dt_s) {
  const double incoming = state_.harvest_power_w * dt_s;
  const double unclamped = state_.charge_j + incoming;
  state_ = seasons::harvest(state_, dt_s);
  harvested_j_ += incoming;
  if (unclamped > state_.capacity_j) clamped_j_ += unclamped - state_.capacity_j;
}

bool EnergyStore::try_consume(double cost_j) {
  const auto result = seasons::try_consume(state_, cost_j);
  if (result.success) {
    consumed_j_ += state_.charge_j - result.state.charge_j;
    state_ = result.state;
  }
  return result.success;
}

double EnergyStore::conservation_residual() const noexcept {
  return initial_j_ + harvested_j_ - consumed_j_ - clamped_j_ - state_.charge_j;
}

}  // namespace seasons
