#include "seasons/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "seasons/errors.hpp"

namespace seasons {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    const auto piece = trim(s.substr(start, pos == std::string_view::npos
                                                ? std::string_view::npos
                                                : pos - start));
    if (!piece.empty()) out.push_back(piece);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

[[noreturn]] void usage(std::string_view key, std::string_view what) {
  throw UsageError(std::string(key) + ": " + std::string(what));
}

double to_double(std::string_view key, std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc{} || ptr != end || !std::isfinite(v))
    usage(key, "'" + std::string(text) + "' is not a number");
  return v;
}

std::uint64_t to_uint(std::string_view key, std::string_view text) {
  text = trim(text);
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc{} || ptr != end)
    usage(key, "'" + std::string(text) + "' is not a non-negative integer");
  return v;
}

// "a,b,c" or an inclusive range "start:stop:step".
std::vector<double> to_double_list(std::string_view key, std::string_view text) {
  std::vector<double> out;
  for (auto item : split(text, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() == 1) {
      out.push_back(to_double(key, parts[0]));
      continue;
    }
    if (parts.size() != 3) usage(key, "ranges are written start:stop:step");
    const double start = to_double(key, parts[0]);
    const double stop = to_double(key, parts[1]);
    const double step = to_double(key, parts[2]);
    if (!(step > 0.0) || stop < start) usage(key, "empty or descending range");
    const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    for (std::size_t i = 0; i < n; ++i) {
      const double v = start + static_cast<double>(i) * step;
      out.push_back(std::round(v * 1e12) / 1e12);
    }
  }
  if (out.empty()) usage(key, "empty list");
  return out;
}

void check_range(std::string_view key, double v, double lo, double hi,
                 bool lo_open, bool hi_open = false) {
  const bool ok = (lo_open ? v > lo : v >= lo) && (hi_open ? v < hi : v <= hi);
  if (!ok) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "value %g out of range %c%g, %g%c", v,
                  lo_open ? '(' : '[', lo, hi, hi_open ? ')' : ']');
    usage(key, buf);
  }
}

constexpr double kInf = 1e300;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string optional_field(const std::optional<double>& v) {
  return v ? format_double(*v) : "nan";
}

using Setter = void (*)(SweepSpec&, std::string_view key, std::string_view value);

const std::map<std::string_view, Setter>& setters() {
  static const std::map<std::string_view, Setter> table = {
      {"budgets",
       [](SweepSpec& s, std::string_view k, std::string_view v) {
         s.budgets = to_double_list(k, v);
         for (double b : s.budgets) check_range(k, b, 0.0, 1.0, true);
       }},
      {"latencies",
       [](SweepSpec& s, std::string_view k, std::string_view v) {
         s.latencies_s = to_double_list(k, v);
         for (double l : s.latencies_s) check_range(k, l, 0.0, kInf, true);
       }},
      {"modes",
       [](SweepSpec& s, std::string_view k, std::string_view v) {
         s.modes.clear();
         for (auto name : split(v, ',')) {
           try {
             s.modes.push_back(parse_mode(name));
           } catch (const InputError& e) {
             usage(k, e.what());
           }
         }
         if (s.modes.empty()) usage(k, "empty list");
       }},
      {"seeds",
       [](SweepSpec& s, std::string_view k, std::string_view v) {
         s.seeds.clear();
         for (auto item : split(v, ',')) s.seeds.push_back(to_uint(k, item));
         if (s.seeds.empty()) usage(k, "empty list");
       }},
      {"datasets",
       [](SweepSpec& s, std::string_view, std::string_view v) {
         std::erase_if(s.signals, [](const SignalSpec& x) {
           return x.kind == SignalSpec::Kind::kDataset;
         });
         for (auto path : split(v, ';'))
           s.signals.push_back(SignalSpec::dataset(std::string(path)));
       }},
      {"format",
       [](SweepSpec& s, std::string_view k, std::string_view v) {
         SeriesFormat f{};
         try {
           f = parse_series_format(trim(v));
         } catch (const InputError& e) {
           usage(k, e.what());
         }
         s.dataset_format = f;
       }},
      {"synthetic",
       [](SweepSpec& s, std::string_view k, std::string_view v) {
         std::erase_if(s.signals, [](const SignalSpec& x) {
           return x.kind == SignalSpec::Kind::kTwoPhase;
         });
         for (auto item : split(v, ';')) {
           try {
             s.signals.push_back(SignalSpec::parse_synthetic(item));
           } catch (const InputError& e) {
             usage(k, e.what());
           }
         }
       }},
      {"jobs",
       [](SweepSpec& s, std::string_view k, std::string_view v) {
         const auto n = to_uint(k, v);
         if (n < 1 || n > 1024) usage(k, "must be in [1, 1024]");
         s.jobs = static_cast<unsigned>(n);
       }},
      {"f_max_hz",
       [](SweepSpec& s, std::string_view k, std::string_view v) {
         s.model.f_max_hz = to_double(k, v);
         check_range(k, s.model.f_max_hz, 0.0, kInf, true);
       }},
      {"sample_mw",
       [](SweepSpec& s, std::string_view k, std::string_view v) {
         s.model.powers.sampling_w = to_double(k, v) * kMilli;
         check_range(k, s.model.powers.sampling_w, 0.0, kInf, true);
       }},
      {"encrypt_mw",
       [](SweepSpec& s, std::string_view k, std::string_view v) {
         s.model.powers.encryption_w = to_double(k, v) * kMilli;
         check_range(k, s.model.powers.encryption_w, 0.0, kInf, true);
       }},
      {"ble_mw",
       [](SweepSpec& s, std::string_view k, std::string_view v) {
         s.model.powers.ble_w = to_double(k, v) * kMilli;
         check_range(k, s.model.powers.ble_w, 0.0, kInf, true);
       }},
      {"window_s",
       [](SweepSpec& s, std::string_view k, std::string_view v) {
         s.model.cost_window_s = to_double(k, v);
         check_range(k, s.model.cost_window_s, 0.0, kInf, true);
       }},
      {"capacitor_uj",
       [](SweepSpec& s, std::string_view k, std::string_view v) {
         s.model.capacitor_j = to_double(k, v) * kMicro;
         check_range(k, s.model.capacitor_j, 0.0, kInf, true);
       }},
      {"harvest_power_mw",
       [](SweepSpec& s, std::string_view k, std::string_view v) {
         const double w = to_double(k, v) * kMilli;
         check_range(k, w, 0.0, kInf, false);
         s.model.harvest_power_w = w;
       }},
      {"initial_charge_fraction",
       [](SweepSpec& s, std::string_view k, std::string_view v) {
         s.model.initial_charge_fraction = to_double(k, v);
         check_range(k, s.model.initial_charge_fraction, 0.0, 1.0, false);
       }},
      {"k_min",
       [](SweepSpec& s, std::string_view k, std::string_view v) {
         const auto n = to_uint(k, v);
         if (n < 1 || n > 1'000'000) usage(k, "must be in [1, 1000000]");
         s.model.asa.k_min = static_cast<int>(n);
       }},
      {"k_max",
       [](SweepSpec& s, std::string_view k, std::string_view v) {
         const auto n = to_uint(k, v);
         if (n < 1 || n > 1'000'000) usage(k, "must be in [1, 1000000]");
         s.model.asa.k_max = static_cast<int>(n);
       }},
      {"theta_init",
       [](SweepSpec& s, std::string_view k, std::string_view v) {
         s.model.asa.theta_init = to_double(k, v);
         check_range(k, s.model.asa.theta_init, 0.0, kInf, false);
       }},
      {"theta_step",
       [](SweepSpec& s, std::string_view k, std::string_view v) {
         s.model.asa.theta_step = to_double(k, v);
         check_range(k, s.model.asa.theta_step, 1.0, kInf, true);
       }},
      {"ewma_weight",
       [](SweepSpec& s, std::string_view k, std::string_view v) {
         s.model.asa.ewma_weight = to_double(k, v);
         check_range(k, s.model.asa.ewma_weight, 0.0, 1.0, true);
       }},
      {"target_rate",
       [](SweepSpec& s, std::string_view k, std::string_view v) {
         const double r = to_double(k, v);
         check_range(k, r, 0.0, 1.0, true);
         s.model.target_rate = r;
       }},
      {"release_fraction",
       [](SweepSpec& s, std::string_view k, std::string_view v) {
         s.model.release_fraction = to_double(k, v);
         check_range(k, s.model.release_fraction, 0.0, 1.0, true);
       }},
      {"guard_samples",
       [](SweepSpec& s, std::string_view k, std::string_view v) {
         const double g = to_double(k, v);
         check_range(k, g, 0.0, kInf, false);
         s.model.guard_samples = g;
       }},
      {"surplus_sampling",
       [](SweepSpec& s, std::string_view k, std::string_view v) {
         v = trim(v);
         if (v == "true" || v == "1" || v == "on") {
           s.model.surplus_sampling = true;
         } else if (v == "false" || v == "0" || v == "off") {
           s.model.surplus_sampling = false;
         } else {
           usage(k, "expected true or false");
         }
       }},
      {"queue_capacity",
       [](SweepSpec& s, std::string_view k, std::string_view v) {
         const auto n = to_uint(k, v);
         if (n < 1) usage(k, "must be >= 1");
         s.model.queue_capacity = static_cast<std::size_t>(n);
       }},
      {"max_dequeues_per_tick",
       [](SweepSpec& s, std::string_view k, std::string_view v) {
         const auto n = to_uint(k, v);
         if (n < 1) usage(k, "must be >= 1");
         s.model.max_dequeues_per_tick = static_cast<std::size_t>(n);
       }},
      {"dynamics_window_s",
       [](SweepSpec& s, std::string_view k, std::string_view v) {
         s.model.window_s = to_double(k, v);
         check_range(k, s.model.window_s, 0.0, kInf, true);
       }},
  };
  return table;
}

std::string_view canonical_key(std::string_view key) {
  if (key == "budget") return "budgets";
  if (key == "latency") return "latencies";
  if (key == "mode") return "modes";
  if (key == "seed") return "seeds";
  if (key == "dataset") return "datasets";
  return key;
}

void apply(SweepSpec& spec, std::string_view raw_key, std::string_view value) {
  const auto named = trim(raw_key);
  const auto& table = setters();
  const auto it = table.find(canonical_key(named));
  if (it == table.end()) usage(named, "unknown key");
  it->second(spec, named, value);
}

}  // namespace

SignalSpec SignalSpec::parse_synthetic(std::string_view text) {
  text = trim(text);
  constexpr std::string_view prefix = "two-phase:";
  if (!text.starts_with(prefix))
    throw InputError("synthetic signal '" + std::string(text) +
                     "' must look like two-phase:V,F,A,P[,C]");
  const auto parts = split(text.substr(prefix.size()), ',');
  if (parts.size() != 4 && parts.size() != 5)
    throw InputError("two-phase takes V,F,A,P[,C], got '" + std::string(text) + "'");

  const auto count = [&](std::string_view p, std::string_view name) {
    try {
      const auto n = to_uint(name, p);
      if (n == 0) throw InputError(std::string(name) + " must be > 0");
      return static_cast<std::size_t>(n);
    } catch (const UsageError& e) {
      throw InputError(e.what());
    }
  };
  SignalSpec s;
  s.kind = Kind::kTwoPhase;
  s.volatile_len = count(parts[0], "volatile length");
  s.flat_len = count(parts[1], "flat length");
  try {
    s.amplitude = to_double("amplitude", parts[2]);
  } catch (const UsageError& e) {
    throw InputError(e.what());
  }
  if (s.amplitude < 0.0) throw InputError("amplitude must be >= 0");
  s.period = count(parts[3], "period");
  if (s.period < 2) throw InputError("period must be >= 2");
  s.cycles = parts.size() == 5 ? count(parts[4], "cycles") : 1;
  return s;
}

SignalSpec SignalSpec::dataset(std::filesystem::path path,
                               std::optional<SeriesFormat> format) {
  SignalSpec s;
  s.kind = Kind::kDataset;
  s.path = std::move(path);
  s.format = format;
  return s;
}

std::string SignalSpec::label() const {
  if (kind == Kind::kDataset) return path.stem().string();
  std::string out = "two-phase:" + std::to_string(volatile_len) + "," +
                    std::to_string(flat_len) + "," + format_double(amplitude) +
                    "," + std::to_string(period);
  if (cycles != 1) out += "," + std::to_string(cycles);
  return out;
}

GroundTruth SignalSpec::materialize(std::uint64_t seed,
                                    double tick_period) const {
  if (kind == Kind::kDataset) {
    const SeriesFormat f = format.value_or(
        path.extension() == ".tsv" ? SeriesFormat::kTsvUcr : SeriesFormat::kCsvRows);
    return load_series(path, f, tick_period);
  }
  return gen_two_phase_cycles(volatile_len, flat_len, amplitude, period, cycles,
                              seed, tick_period);
}

TaskCosts ModelParams::costs() const {
  return derive_costs(powers, f_max_hz * cost_window_s, cost_window_s);
}

void SweepSpec::validate() const {
  if (signals.empty()) throw UsageError("signals: no dataset or synthetic signal");
  if (budgets.empty()) throw UsageError("budgets: empty list");
  if (latencies_s.empty()) throw UsageError("latencies: empty list");
  if (modes.empty()) throw UsageError("modes: empty list");
  if (seeds.empty()) throw UsageError("seeds: empty list");
  if (model.asa.k_max < model.asa.k_min) throw UsageError("k_max: must be >= k_min");
}

SweepSpec default_sweep_spec() {
  SweepSpec s;
  s.signals.push_back(SignalSpec::parse_synthetic("two-phase:150,150,1,25,10"));
  s.budgets = {0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  s.latencies_s = {0.5, 1.0, 2.0, 5.0, 10.0};
  s.modes.assign(std::begin(kAllModes), std::end(kAllModes));
  s.seeds = {1};
  return s;
}

SweepSpec parse_config(std::string_view config_text,
                       std::span<const KeyValue> overrides) {
  SweepSpec spec = default_sweep_spec();
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= config_text.size()) {
    const auto nl = config_text.find('\n', start);
    std::string_view line = config_text.substr(
        start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos)
        throw UsageError("config line " + std::to_string(line_no) +
                         ": expected key = value");
      apply(spec, line.substr(0, eq), line.substr(eq + 1));
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  for (const auto& [key, value] : overrides) apply(spec, key, value);
  spec.validate();
  return spec;
}

SweepSpec parse_config_file(const std::optional<std::filesystem::path>& path,
                            std::span<const KeyValue> overrides) {
  std::string text;
  if (path) {
    std::ifstream in(*path);
    if (!in) throw UsageError("config: cannot open " + path->string());
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return parse_config(text, overrides);
}

RunConfig make_run_config(const ModelParams& model, const GroundTruth& gt,
                          Mode mode, double budget, double latency_s,
                          std::uint64_t seed) {
  RunConfig c;
  c.mode = mode;
  c.ground_truth = gt;
  c.budget_rate = budget;
  c.latency_s = latency_s;
  c.costs = model.costs();
  c.capacitor_j = model.capacitor_j;
  c.harvest_power_w = model.harvest_power_w;
  c.initial_charge_fraction = model.initial_charge_fraction;
  c.asa = model.asa;
  c.target_rate = model.target_rate;
  c.release_fraction = model.release_fraction;
  c.guard_samples = model.guard_samples;
  c.surplus_sampling = model.surplus_sampling;
  c.queue_capacity = model.queue_capacity;
  c.max_dequeues_per_tick = model.max_dequeues_per_tick;
  c.window_s = model.window_s;
  c.seed = seed;
  return c;
}

namespace {

struct Task {
  std::size_t group;
  Mode mode;
  bool emit;  // requested by the spec, not only a reference run
  std::optional<RunMetrics> metrics;
  std::string error;
  std::string trace;
};

std::string trace_lines(const SweepRow& row, const std::vector<TickRecord>& ticks) {
  std::string out;
  const std::string prefix = csv_field(row.signal) + "," +
                             format_double(row.budget) + "," +
                             format_double(row.latency_s) + "," +
                             std::string(to_string(row.mode)) + "," +
                             std::to_string(row.seed) + ",";
  for (const auto& r : ticks) {
    std::string event;
    const auto add = [&event](const std::string& token) {
      if (!event.empty()) event += ';';
      event += token;
    };
    if (r.expired) add("expire:" + std::to_string(r.expired));
    if (r.sampled) add(r.surplus ? "surplus" : "sample");
    if (r.power_failure) add("fail");
    if (r.sent) add("send:" + std::to_string(r.sent));
    out += prefix + std::to_string(r.tick) + "," +
           format_double(r.charge_j / kMicro) + "," +
           std::to_string(r.queue_len) + "," + format_double(r.requested_rate) +
           "," + format_double(r.safe_rate) + "," + (r.in_critical ? "1" : "0") +
           "," + event + "\n";
  }
  return out;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, std::ostream* trace) {
  spec.validate();
  const double tick_period = 1.0 / spec.model.f_max_hz;

  struct Group {
    std::size_t signal;
    std::uint64_t seed;
    double budget;
    double latency;
  };
  std::vector<Group> groups;
  for (std::size_t s = 0; s < spec.signals.size(); ++s)
    for (auto seed : spec.seeds)
      for (double b : spec.budgets)
        for (double l : spec.latencies_s) groups.push_back({s, seed, b, l});

  // Materialize every (signal, seed) once. Failures become row errors.
  std::map<std::pair<std::size_t, std::uint64_t>, std::optional<GroundTruth>> signals;
  std::map<std::pair<std::size_t, std::uint64_t>, std::string> signal_errors;
  for (std::size_t s = 0; s < spec.signals.size(); ++s)
    for (auto seed : spec.seeds) {
      try {
        SignalSpec sig = spec.signals[s];
        if (!sig.format) sig.format = spec.dataset_format;
        signals[{s, seed}] = sig.materialize(seed, tick_period);
      } catch (const std::exception& e) {
        signals[{s, seed}] = std::nullopt;
        signal_errors[{s, seed}] = e.what();
      }
    }

  std::vector<Task> tasks;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (Mode m : spec.modes) tasks.push_back({g, m, true, {}, {}, {}});
    for (Mode ref : {Mode::kEi, Mode::kSeb})
      if (std::find(spec.modes.begin(), spec.modes.end(), ref) == spec.modes.end())
        tasks.push_back({g, ref, false, {}, {}, {}});
  }

  const auto execute = [&](Task& task) {
    const Group& g = groups[task.group];
    const auto& gt = signals.at({g.signal, g.seed});
    if (!gt) {
      task.error = signal_errors.at({g.signal, g.seed});
      return;
    }
    try {
      const RunConfig config =
          make_run_config(spec.model, *gt, task.mode, g.budget, g.latency, g.seed);
      if (trace && task.emit) {
        std::vector<TickRecord> ticks;
        ticks.reserve(gt->size());
        task.metrics = run(config, [&ticks](const TickRecord& r) { ticks.push_back(r); });
        SweepRow row{spec.signals[g.signal].label(), g.budget, g.latency,
                     task.mode, g.seed, {}, {}, {}, {}};
        task.trace = trace_lines(row, ticks);
      } else {
        task.metrics = run(config);
      }
    } catch (const std::exception& e) {
      task.error = e.what();
    }
  };

  const unsigned workers =
      std::max(1u, std::min<unsigned>(spec.jobs, static_cast<unsigned>(tasks.size())));
  if (workers == 1) {
    for (auto& t : tasks) execute(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) execute(tasks[i]);
      });
    for (auto& th : pool) th.join();
  }

  // Reference MAEs per group.
  std::vector<std::optional<double>> ei_mae(groups.size());
  std::vector<std::optional<double>> seb_mae(groups.size());
  for (const auto& t : tasks) {
    if (!t.metrics) continue;
    if (t.mode == Mode::kEi) ei_mae[t.group] = t.metrics->mae;
    if (t.mode == Mode::kSeb) seb_mae[t.group] = t.metrics->mae;
  }

  std::vector<SweepRow> rows;
  if (trace)
    *trace << "signal,budget,latency_s,mode,seed,tick,charge_uj,queue_len,"
                  "requested_rate,safe_rate,critical,event\n";
  for (auto& t : tasks) {
    if (!t.emit) continue;
    const Group& g = groups[t.group];
    SweepRow row;
    row.signal = spec.signals[g.signal].label();
    row.budget = g.budget;
    row.latency_s = g.latency;
    row.mode = t.mode;
    row.seed = g.seed;
    row.error = t.error;
    if (t.metrics) {
      const auto& ei = ei_mae[t.group];
      const auto& seb = seb_mae[t.group];
      if (ei) {
        row.improvement = improvement(t.metrics->mae, *ei);
        if (seb && row.improvement) {
          if (const auto imp_seb = improvement(*seb, *ei))
            row.normalized_improvement =
                normalized_improvement(*row.improvement, *imp_seb);
        }
      }
      row.metrics = std::move(t.metrics);
    }
    if (trace) *trace << t.trace;
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << csv_field(r.signal) << ',' << format_double(r.budget) << ','
        << format_double(r.latency_s) << ',' << to_string(r.mode) << ','
        << r.seed << ',';
    if (r.metrics) {
      const auto& m = *r.metrics;
      out << format_double(m.mae) << ',' << optional_field(r.improvement) << ','
          << optional_field(r.normalized_improvement) << ',' << m.samples_taken
          << ',' << m.samples_sent << ',' << m.samples_expired << ','
          << m.power_failures << ',' << format_double(m.energy_consumed_j)
          << ',' << format_double(m.energy_clamped_j);
    } else {
      out << ",,,,,,,,";
    }
    out << '\n';
  }
}

void emit_csv(std::span<const SweepRow> rows, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path.string());
  write_csv(out, rows);
  out.flush();
  if (!out) throw InputError("write failed: " + path.string());
}

bool has_errors(std::span<const SweepRow> rows) {
  return std::any_of(rows.begin(), rows.end(),
                     [](const SweepRow& r) { return !r.error.empty(); });
}

}  // namespace seasons
