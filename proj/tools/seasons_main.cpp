// seasons: run energy-budget and latency sweeps over the four system
// configurations and write one CSV row per run.
//
// Exit codes: 0 success, 1 usage error, 2 at least one run failed.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "seasons/errors.hpp"
#include "seasons/experiment.hpp"

namespace {

std::string join(const std::vector<std::string>& items, char sep) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += sep;
    out += item;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signal- and energy-aware sampling sweeps on intermittent systems"};
  app.set_version_flag("--version", "seasons 0.1.0");

  std::optional<std::string> config_path;
  std::vector<std::string> datasets;
  std::optional<std::string> format;
  std::vector<std::string> synthetic;
  std::optional<std::string> budgets;
  std::optional<std::string> latencies;
  std::optional<std::string> modes;
  std::optional<std::string> seeds;
  std::optional<std::string> jobs;
  std::optional<std::string> out_path;
  std::optional<std::string> trace_path;
  std::vector<std::string> sets;

  app.add_option("--config", config_path, "key = value config file");
  app.add_option("--dataset", datasets, "dataset file (repeatable)");
  app.add_option("--format", format, "dataset format: csv-rows or tsv-ucr");
  app.add_option("--synthetic", synthetic,
                 "synthetic signal two-phase:V,F,A,P[,C] (repeatable)");
  app.add_option("--budget", budgets, "collection budgets, F[,F...] or start:stop:step");
  app.add_option("--latency", latencies, "latency constraints in seconds, S[,S...]");
  app.add_option("--mode", modes, "ei, seb, seasons_nolg, seasons (comma separated)");
  app.add_option("--seed", seeds, "seed(s) for synthetic signals, N[,N...]");
  app.add_option("--jobs", jobs, "worker threads");
  app.add_option("--out", out_path, "output CSV path (default stdout)");
  app.add_option("--trace", trace_path, "per-tick trace CSV path");
  app.add_option("--set", sets, "model override key=value (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "seasons: " << e.what() << "\n";
    return 1;
  }

  std::vector<seasons::KeyValue> overrides;
  for (const auto& kv : sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::cerr << "seasons: --set expects key=value, got '" << kv << "'\n";
      return 1;
    }
    overrides.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (!datasets.empty()) overrides.emplace_back("datasets", join(datasets, ';'));
  if (format) overrides.emplace_back("format", *format);
  if (!synthetic.empty()) overrides.emplace_back("synthetic", join(synthetic, ';'));
  if (budgets) overrides.emplace_back("budgets", *budgets);
  if (latencies) overrides.emplace_back("latencies", *latencies);
  if (modes) overrides.emplace_back("modes", *modes);
  if (seeds) overrides.emplace_back("seeds", *seeds);
  if (jobs) overrides.emplace_back("jobs", *jobs);

  seasons::SweepSpec spec;
  try {
    std::optional<std::filesystem::path> path;
    if (config_path) path = *config_path;
    spec = seasons::parse_config_file(path, overrides);
  } catch (const seasons::UsageError& e) {
    std::cerr << "seasons: " << e.what() << "\n";
    return 1;
  }

  std::ofstream trace_file;
  if (trace_path) {
    trace_file.open(*trace_path, std::ios::binary | std::ios::trunc);
    if (!trace_file) {
      std::cerr << "seasons: cannot write " << *trace_path << "\n";
      return 1;
    }
  }

  const auto rows = seasons::run_sweep(spec, trace_path ? &trace_file : nullptr);
  for (const auto& row : rows)
    if (!row.error.empty())
      std::cerr << "seasons: run failed [" << row.signal << " budget=" << row.budget
                << " latency=" << row.latency_s << " mode="
                << seasons::to_string(row.mode) << " seed=" << row.seed
                << "]: " << row.error << "\n";

  try {
    if (out_path)
      seasons::emit_csv(rows, *out_path);
    else
      seasons::write_csv(std::cout, rows);
  } catch (const seasons::InputError& e) {
    std::cerr << "seasons: " << e.what() << "\n";
    return 2;
  }
  return seasons::has_errors(rows) ? 2 : 0;
}
