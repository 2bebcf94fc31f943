#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace seasons {

// 50 Hz, the accelerometer rate used throughout the evaluation.
inline constexpr double kDefaultTickPeriod = 0.02;

/// A uniformly sampled scalar signal. Reading i occurs at i * tick_period.
struct GroundTruth {
  std::vector<double> values;
  double tick_period = kDefaultTickPeriod;

  [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
  [[nodiscard]] double time_of(std::size_t i) const noexcept {
    return static_cast<double>(i) * tick_period;
  }
  [[nodiscard]] double duration() const noexcept {
    return static_cast<double>(values.size()) * tick_period;
  }

  // Throws InputError if empty or tick_period <= 0.
  void validate() const;

  friend bool operator==(const GroundTruth&, const GroundTruth&) = default;
};

enum class SeriesFormat {
  kCsvRows,  // one reading per line
  kTsvUcr,   // tab separated; first column is a class label and is dropped
};

// Accepts "csv-rows" and "tsv-ucr".
SeriesFormat parse_series_format(std::string_view name);
std::string_view to_string(SeriesFormat format) noexcept;

/// Loads a series file. Multi-row files are concatenated in file order into a
/// single stream. Blank lines are skipped; in tsv-ucr, NaN padding cells are
/// dropped. Parse failures throw InputError naming the 1-based line number.
GroundTruth load_series(const std::filesystem::path& path, SeriesFormat format,
                        double tick_period = kDefaultTickPeriod);

// Same as load_series but over an already-open stream. `source` is only used
// in error messages.
GroundTruth parse_series(std::istream& in, SeriesFormat format,
                         double tick_period = kDefaultTickPeriod,
                         std::string_view source = "<stream>");

/// Synthetic signal with one volatile phase followed by one flat phase.
///
/// The first `volatile_len` ticks are a unit sinusoid of `period` ticks plus a
/// seeded random walk whose steps are uniform in [-amplitude, amplitude]. The
/// walk's orientation is chosen so that it never anti-correlates with the
/// sinusoid, which makes the volatile-phase spread non-decreasing in
/// amplitude. The remaining `flat_len` ticks repeat the last volatile value.
GroundTruth gen_two_phase(std::size_t volatile_len, std::size_t flat_len,
                          double amplitude, std::size_t period,
                          std::uint64_t seed,
                          double tick_period = kDefaultTickPeriod);

// `cycles` two-phase segments back to back, each with its own derived seed and
// shifted so the signal is continuous at segment boundaries.
GroundTruth gen_two_phase_cycles(std::size_t volatile_len, std::size_t flat_len,
                                 double amplitude, std::size_t period,
                                 std::size_t cycles, std::uint64_t seed,
                                 double tick_period = kDefaultTickPeriod);

struct DatasetStats {
  double mean = 0.0;
  double std_dev = 0.0;       // population standard deviation
  std::optional<double> cv;   // std_dev / |mean|; empty when mean == 0
};

DatasetStats stats(std::span<const double> values);
inline DatasetStats stats(const GroundTruth& gt) { return stats(gt.values); }

}  // namespace seasons
