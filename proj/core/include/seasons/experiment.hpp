#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seasons/energy_model.hpp"
#include "seasons/sampling_policy.hpp"
#include "seasons/sim_engine.hpp"
#include "seasons/signal_source.hpp"

namespace seasons {

/// A signal axis entry: either a dataset file or a synthetic two-phase signal.
struct SignalSpec {
  enum class Kind { kDataset, kTwoPhase };

  Kind kind = Kind::kTwoPhase;
  std::filesystem::path path;
  std::optional<SeriesFormat> format;  // inferred from the extension if empty

  std::size_t volatile_len = 150;
  std::size_t flat_len = 150;
  double amplitude = 1.0;
  std::size_t period = 25;
  std::size_t cycles = 10;

  // "two-phase:V,F,A,P[,C]"
  static SignalSpec parse_synthetic(std::string_view text);
  static SignalSpec dataset(std::filesystem::path path,
                            std::optional<SeriesFormat> format = std::nullopt);

  [[nodiscard]] std::string label() const;
  [[nodiscard]] GroundTruth materialize(std::uint64_t seed,
                                        double tick_period) const;
};

/// Everything about a run that is not a sweep axis.
struct ModelParams {
  double f_max_hz = 50.0;
  TablePowers powers = kEdgeSensorPowers;
  double cost_window_s = kEdgeSensorWindowS;
  double capacitor_j = kDefaultCapacitorJ;
  std::optional<double> harvest_power_w;
  double initial_charge_fraction = 0.0;
  AsaParams asa;
  std::optional<double> target_rate;
  double release_fraction = kDefaultReleaseFraction;
  std::optional<double> guard_samples;
  bool surplus_sampling = true;
  std::optional<std::size_t> queue_capacity;
  std::optional<std::size_t> max_dequeues_per_tick;
  double window_s = 1.0;

  [[nodiscard]] TaskCosts costs() const;
};

struct SweepSpec {
  std::vector<SignalSpec> signals;
  std::vector<double> budgets;
  std::vector<double> latencies_s;
  std::vector<Mode> modes;
  std::vector<std::uint64_t> seeds;
  // Applies to datasets without their own format; otherwise inferred from
  // the file extension (.tsv is tsv-ucr, anything else csv-rows).
  std::optional<SeriesFormat> dataset_format;
  ModelParams model;
  unsigned jobs = 1;

  void validate() const;  // throws UsageError
};

SweepSpec default_sweep_spec();

using KeyValue = std::pair<std::string, std::string>;

/// Resolves a sweep from `key = value` config text and flag overrides, in
/// that precedence order over the defaults. Unknown keys and out-of-range
/// values throw UsageError naming the key.
SweepSpec parse_config(std::string_view config_text,
                       std::span<const KeyValue> overrides = {});
SweepSpec parse_config_file(const std::optional<std::filesystem::path>& path,
                            std::span<const KeyValue> overrides = {});

struct SweepRow {
  std::string signal;
  double budget = 0.0;
  double latency_s = 0.0;
  Mode mode = Mode::kEi;
  std::uint64_t seed = 0;
  std::optional<RunMetrics> metrics;
  std::optional<double> improvement;
  std::optional<double> normalized_improvement;
  std::string error;  // non-empty when the run failed
};

/// One row per (signal, seed, budget, latency, mode), in that nesting order.
/// EI and SEB references are run for every group even when not requested so
/// the improvement columns are always defined. Run failures land in the
/// row's error field and never abort the sweep. When `trace` is set, per-tick
/// rows for every emitted run are written to it in row order.
std::vector<SweepRow> run_sweep(const SweepSpec& spec,
                                std::ostream* trace = nullptr);

RunConfig make_run_config(const ModelParams& model, const GroundTruth& gt,
                          Mode mode, double budget, double latency_s,
                          std::uint64_t seed);

inline constexpr std::string_view kCsvHeader =
    "signal,budget,latency_s,mode,seed,mae,improvement,"
    "normalized_improvement,samples_taken,samples_sent,samples_expired,"
    "power_failures,energy_consumed_j,energy_clamped_j";

void write_csv(std::ostream& out, std::span<const SweepRow> rows);
void emit_csv(std::span<const SweepRow> rows, const std::filesystem::path& path);

bool has_errors(std::span<const SweepRow> rows);

}  // namespace seasons
