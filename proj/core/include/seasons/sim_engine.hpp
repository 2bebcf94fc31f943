#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "seasons/controller.hpp"
#include "seasons/energy_model.hpp"
#include "seasons/evaluator.hpp"
#include "seasons/sampling_policy.hpp"
#include "seasons/signal_source.hpp"

namespace seasons {

enum class Mode {
  kEi,           // energy-aware intermittent, uniform sampling
  kSeb,          // linear ASA with a battery-sized buffer
  kSeasonsNoLg,  // ASA + time buffering + freshness drops, no controller
  kSeasons,      // ASA + time buffering + queue-dynamics controller
};

inline constexpr Mode kAllModes[] = {Mode::kEi, Mode::kSeb, Mode::kSeasonsNoLg,
                                     Mode::kSeasons};

std::string_view to_string(Mode mode) noexcept;
Mode parse_mode(std::string_view name);  // "ei", "seb", "seasons_nolg", "seasons"

struct RunConfig {
  Mode mode = Mode::kSeasons;
  GroundTruth ground_truth;
  double budget_rate = 0.6;
  double latency_s = 2.0;
  TaskCosts costs = edge_sensor_costs();
  double capacitor_j = kDefaultCapacitorJ;
  // Overrides budget_to_power(budget_rate, ...) when set.
  std::optional<double> harvest_power_w;
  // Starting charge of the capacitor as a fraction of capacity. The
  // battery-backed mode always starts full.
  double initial_charge_fraction = 0.0;
  AsaParams asa;
  // When set, replaces budget_rate as the ASA's target collection rate.
  std::optional<double> target_rate;
  double release_fraction = kDefaultReleaseFraction;
  // Latch slack below d * L; default_guard_samples(costs) when unset.
  std::optional<double> guard_samples;
  // ASA-driven modes spend charge that would overflow on extra samples.
  bool surplus_sampling = true;
  std::optional<std::size_t> queue_capacity;
  std::optional<std::size_t> max_dequeues_per_tick;
  // Window for queue dynamics and per-window energy accounting.
  double window_s = 1.0;
  std::uint64_t seed = 0;

  [[nodiscard]] double f_max_hz() const noexcept {
    return 1.0 / ground_truth.tick_period;
  }
  void validate() const;
};

struct WindowEnergy {
  double consumed_j = 0.0;
  double clamped_j = 0.0;
  std::size_t ticks = 0;

  friend bool operator==(const WindowEnergy&, const WindowEnergy&) = default;
};

struct RunMetrics {
  double mae = 0.0;
  std::size_t samples_taken = 0;
  std::size_t samples_sent = 0;
  std::size_t samples_expired = 0;  // freshness drops plus queue overflows
  std::size_t queue_residual = 0;
  std::size_t power_failures = 0;
  double energy_initial_j = 0.0;
  double energy_harvested_j = 0.0;
  double energy_consumed_j = 0.0;
  double energy_clamped_j = 0.0;
  double energy_final_j = 0.0;
  double capacity_j = 0.0;
  double harvest_power_w = 0.0;
  std::size_t critical_count = 0;  // 0 when the controller is off
  std::size_t critical_entries = 0;
  std::size_t max_queue_len = 0;
  std::vector<WindowEnergy> per_window_energy;
  ReceivedLog received_log;
  std::vector<Tick> delivered_at;  // tick each received_log entry was sent
  bool degenerate_reconstruction = false;  // nothing reached the server

  friend bool operator==(const RunMetrics&, const RunMetrics&) = default;
};

/// State after one tick, handed to an optional observer.
struct TickRecord {
  Tick tick = 0;
  double charge_j = 0.0;
  double capacity_j = 0.0;
  std::size_t queue_len = 0;
  double requested_rate = 0.0;
  double safe_rate = 0.0;
  bool in_critical = false;
  bool sampled = false;
  bool surplus = false;  // the sample came from overflow charge
  bool power_failure = false;
  std::size_t expired = 0;  // removed this tick
  std::size_t sent = 0;     // transmitted this tick
  std::size_t samples_taken = 0;
  std::size_t samples_sent = 0;
  std::size_t samples_expired = 0;
  double conservation_residual_j = 0.0;
};

using TickObserver = std::function<void(const TickRecord&)>;

/// Simulates one configuration. Each tick: harvest, drop expired samples
/// (time-buffered modes), pick the rate (ASA request capped by the controller
/// in kSeasons), plan, then execute sampling before dequeues. Unless disabled,
/// ASA-driven modes take an extra sample whenever the queue is empty and the
/// store would overflow on the next harvest; the policy does not see it. With
/// the controller on, a due sample also waits until the energy arriving by its
/// deadline can serve it and the queue ahead of it.
/// Deterministic for a fixed config. Throws ConfigError for infeasible
/// budgets.
RunMetrics run(const RunConfig& config, const TickObserver& observer = {});

// One run per mode, all on base.ground_truth and base's budget and costs.
std::vector<RunMetrics> compare_modes(const RunConfig& base,
                                      std::span<const Mode> modes);

/// Coefficient of variation of per-window consumption. Steady state skips the
/// first window (the capacitor charging up from its initial level) and any
/// trailing partial window; `steady_only == false` keeps every full window.
/// Empty when fewer than two windows qualify or mean consumption is zero.
std::optional<double> consumption_cov(const RunMetrics& metrics,
                                      bool steady_only = true);

}  // namespace seasons
