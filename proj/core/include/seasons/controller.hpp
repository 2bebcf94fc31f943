#pragma once

#include <cstddef>
#include <optional>

#include "seasons/energy_model.hpp"

namespace seasons {

/// Samples per second the harvest can move through processing and
/// transmission while sampling at the budget rate:
///   (harvest - budget_rate * f_max * e_sample) / (e_process + e_transmit)
/// Throws ConfigError unless that is strictly positive.
double sustainable_dequeue_rate(double harvest_power_w, const TaskCosts& costs,
                                double budget_rate, double f_max_hz);

/// Largest queue length a FIFO drained at `dequeue_rate` can hold while the
/// oldest sample still meets a `latency_s` deadline, floored at one.
std::size_t critical_count_for_rate(double dequeue_rate, double latency_s);

std::size_t critical_count(double harvest_power_w, const TaskCosts& costs,
                           double budget_rate, double f_max_hz,
                           double latency_s);

inline constexpr double kDefaultReleaseFraction = 0.8;

/// Samples of slack the latch keeps below the fluid drain bound d * L. The
/// fluid bound ignores that a new sample needs its own service, that a capped
/// queue can sit one above the threshold, and that the rate-credit
/// accumulator may spend one extra sampling quantum inside any window (plus
/// the quantum of the sample being taken):
///   2 + 2 * e_sample / (e_process + e_transmit)
double default_guard_samples(const TaskCosts& costs);

struct ControllerState {
  std::size_t critical_count = 1;
  // Queue length at which the cap engages: floor(d * L - guard), may be 0
  // (always capped) when the latency leaves no room for buffering.
  std::size_t latch_count = 1;
  double dequeue_rate_sustainable = 0.0;  // samples/s
  bool in_critical = false;
  double release_fraction = kDefaultReleaseFraction;
  std::size_t critical_entries = 0;  // times the latch has closed
};

ControllerState make_controller_state(double harvest_power_w,
                                      const TaskCosts& costs,
                                      double budget_rate, double f_max_hz,
                                      double latency_s,
                                      double release_fraction =
                                          kDefaultReleaseFraction,
                                      std::optional<double> guard_samples =
                                          std::nullopt);

/// Caps the requested rate at the dequeue-matched uniform rate while the
/// queue is critical. The latch closes at queue_len >= latch_count and opens
/// again once queue_len < latch_count * release_fraction.
double safe_rate(double requested, std::size_t queue_len,
                 ControllerState& state, double f_max_hz);

}  // namespace seasons
