#pragma once

#include "seasons/types.hpp"

namespace seasons {

/// Average power draw of each pipeline stage over one measurement window.
struct TablePowers {
  double sampling_w = 0.0;
  double encryption_w = 0.0;
  double ble_w = 0.0;
};

// IMU sampling, MSP430 encryption and CC2640R2 BLE, measured over a one
// second window in which 50 accelerometer samples are collected.
inline constexpr TablePowers kEdgeSensorPowers{2.1 * kMilli, 0.2 * kMilli,
                                               8.4 * kMilli};
inline constexpr double kEdgeSensorSamplesPerWindow = 50.0;
inline constexpr double kEdgeSensorWindowS = 1.0;

// About 47 ms of full-pipeline operation at 10.7 mW.
inline constexpr double kDefaultCapacitorJ = 500.0 * kMicro;

/// Per-sample energy of each task, in joules.
struct TaskCosts {
  double sample_j = 0.0;
  double process_j = 0.0;
  double transmit_j = 0.0;

  // Sample, process and transmit one reading.
  [[nodiscard]] double pipeline_j() const noexcept {
    return sample_j + process_j + transmit_j;
  }
  // What it costs to move one queued sample to the server.
  [[nodiscard]] double service_j() const noexcept {
    return process_j + transmit_j;
  }

  void validate() const;  // all three strictly positive
};

TaskCosts derive_costs(const TablePowers& powers, double samples_per_window,
                       double window_s);

inline TaskCosts edge_sensor_costs() {
  return derive_costs(kEdgeSensorPowers, kEdgeSensorSamplesPerWindow,
                      kEdgeSensorWindowS);
}

struct EnergyState {
  double charge_j = 0.0;
  double capacity_j = kDefaultCapacitorJ;
  double harvest_power_w = 0.0;

  friend bool operator==(const EnergyState&, const EnergyState&) = default;
};

// charge' = min(capacity, charge + harvest_power * dt).
EnergyState harvest(const EnergyState& state, double dt_s);

struct ConsumeResult {
  EnergyState state;
  bool success = false;
};

// All-or-nothing: on failure the returned state is the input state.
ConsumeResult try_consume(const EnergyState& state, double cost_j);

/// Constant harvest power that sustains sampling, processing and transmitting
/// `collection_rate` of the f_max possible samples.
double budget_to_power(double collection_rate, const TaskCosts& costs,
                       double f_max_hz);

/// An energy buffer (capacitor, or a battery for the battery-backed baseline)
/// that keeps run-level accounting on top of harvest()/try_consume().
///
/// initial + harvested - consumed - clamped == charge at all times, where
/// `clamped` is harvested energy discarded because the buffer was full.
class EnergyStore {
 public:
  explicit EnergyStore(const EnergyState& initial);

  void harvest(double dt_s);
  [[nodiscard]] bool try_consume(double cost_j);

  [[nodiscard]] const EnergyState& state() const noexcept { return state_; }
  [[nodiscard]] double charge_j() const noexcept { return state_.charge_j; }
  [[nodiscard]] double initial_j() const noexcept { return initial_j_; }
  [[nodiscard]] double harvested_j() const noexcept { return harvested_j_; }
  [[nodiscard]] double consumed_j() const noexcept { return consumed_j_; }
  [[nodiscard]] double clamped_j() const noexcept { return clamped_j_; }

  // initial + harvested - consumed - clamped - charge. Zero up to rounding.
  [[nodiscard]] double conservation_residual() const noexcept;

 private:
  EnergyState state_;
  double initial_j_ = 0.0;
  double harvested_j_ = 0.0;
  double consumed_j_ = 0.0;
  double clamped_j_ = 0.0;
};

}  // namespace seasons
