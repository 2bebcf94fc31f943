#include "seasons/signal_source.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <string>

#include "seasons/errors.hpp"

namespace seasons {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view field) {
  field = trim(field);
  if (field.empty()) return std::nullopt;
  if (field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

[[noreturn]] void parse_failure(std::string_view source, std::size_t line,
                                std::string_view what) {
  throw InputError(std::string(source) + ":" + std::to_string(line) + ": " +
                   std::string(what));
}

// Top 53 bits of a 64-bit draw as a double in [0, 1). Unlike the standard
// distributions this is identical across standard library implementations.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

void GroundTruth::validate() const {
  if (values.empty()) throw InputError("ground truth is empty");
  if (!(tick_period > 0.0)) throw InputError("tick_period must be > 0");
}

SeriesFormat parse_series_format(std::string_view name) {
  if (name == "csv-rows") return SeriesFormat::kCsvRows;
  if (name == "tsv-ucr") return SeriesFormat::kTsvUcr;
  throw InputError("unknown series format '" + std::string(name) +
                   "' (expected csv-rows or tsv-ucr)");
}

std::string_view to_string(SeriesFormat format) noexcept {
  switch (format) {
    case SeriesFormat::kCsvRows: return "csv-rows";
    case SeriesFormat::kTsvUcr: return "tsv-ucr";
  }
  return "?";
}

GroundTruth parse_series(std::istream& in, SeriesFormat format,
                         double tick_period, std::string_view source) {
  GroundTruth gt;
  gt.tick_period = tick_period;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view row = trim(line);
    if (row.empty()) continue;

    if (format == SeriesFormat::kCsvRows) {
      const auto v = parse_number(row);
      if (!v || std::isnan(*v)) parse_failure(source, line_no, "not a number");
      gt.values.push_back(*v);
      continue;
    }

    // tsv-ucr: label, then readings.
    std::size_t start = 0;
    bool label = true;
    while (start <= row.size()) {
      const auto tab = row.find('\t', start);
      const auto end = tab == std::string_view::npos ? row.size() : tab;
      const auto v = parse_number(row.substr(start, end - start));
      if (!v) parse_failure(source, line_no, "not a number");
      if (label) {
        label = false;
      } else if (!std::isnan(*v)) {
        gt.values.push_back(*v);
      }
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
  }
  if (in.bad()) throw InputError(std::string(source) + ": read error");
  if (gt.values.empty()) throw InputError(std::string(source) + ": no readings");
  gt.validate();
  return gt;
}

GroundTruth load_series(const std::filesystem::path& path, SeriesFormat format,
                        double tick_period) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return parse_series(in, format, tick_period, path.string());
}

GroundTruth gen_two_phase(std::size_t volatile_len, std::size_t flat_len,
                          double amplitude, std::size_t period,
                          std::uint64_t seed, double tick_period) {
  if (volatile_len == 0 || flat_len == 0)
    throw InputError("two-phase lengths must be > 0");
  if (period < 2) throw InputError("two-phase period must be >= 2");
  if (!(amplitude >= 0.0)) throw InputError("amplitude must be >= 0");
  if (!(tick_period > 0.0)) throw InputError("tick_period must be > 0");

  std::mt19937_64 rng(seed);
  std::vector<double> wave(volatile_len);
  std::vector<double> walk(volatile_len);
  double position = 0.0;
  for (std::size_t i = 0; i < volatile_len; ++i) {
    wave[i] = std::sin(2.0 * std::numbers::pi * static_cast<double>(i) /
                       static_cast<double>(period));
    position += 2.0 * unit_uniform(rng) - 1.0;
    walk[i] = position;
  }

  double wave_mean = 0.0;
  double walk_mean = 0.0;
  for (std::size_t i = 0; i < volatile_len; ++i) {
    wave_mean += wave[i];
    walk_mean += walk[i];
  }
  wave_mean /= static_cast<double>(volatile_len);
  walk_mean /= static_cast<double>(volatile_len);
  double cov = 0.0;
  for (std::size_t i = 0; i < volatile_len; ++i)
    cov += (wave[i] - wave_mean) * (walk[i] - walk_mean);
  const double orientation = cov < 0.0 ? -1.0 : 1.0;

  GroundTruth gt;
  gt.tick_period = tick_period;
  gt.values.reserve(volatile_len + flat_len);
  for (std::size_t i = 0; i < volatile_len; ++i)
    gt.values.push_back(wave[i] + orientation * amplitude * walk[i]);
  gt.values.insert(gt.values.end(), flat_len, gt.values.back());
  return gt;
}

GroundTruth gen_two_phase_cycles(std::size_t volatile_len, std::size_t flat_len,
                                 double amplitude, std::size_t period,
                                 std::size_t cycles, std::uint64_t seed,
                                 double tick_period) {
  if (cycles == 0) throw InputError("two-phase cycles must be > 0");
  GroundTruth out;
  out.tick_period = tick_period;
  std::uint64_t state = seed;
  for (std::size_t c = 0; c < cycles; ++c) {
    GroundTruth segment =
        gen_two_phase(volatile_len, flat_len, amplitude, period,
                      c == 0 ? seed : (state = splitmix64(state)), tick_period);
    if (!out.values.empty()) {
      const double shift = out.values.back() - segment.values.front();
      for (double& v : segment.values) v += shift;
    }
    out.values.insert(out.values.end(), segment.values.begin(),
                      segment.values.end());
  }
  return out;
}

DatasetStats stats(std::span<const double> values) {
  if (values.empty()) throw InputError("stats of an empty series");
  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);

  DatasetStats out;
  out.mean = mean;
  out.std_dev = std::sqrt(ss / n);
  if (mean != 0.0) out.cv = out.std_dev / std::abs(mean);
  return out;
}

}  // namespace seasons
