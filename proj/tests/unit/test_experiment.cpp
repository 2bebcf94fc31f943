#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "seasons/errors.hpp"
#include "seasons/experiment.hpp"

using namespace seasons;

namespace {

const std::filesystem::path kData = SEASONS_TEST_DATA_DIR;

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

// Counts CSV fields, honouring double-quoted fields.
std::size_t columns(const std::string& line) {
  std::size_t n = 1;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') quoted = !quoted;
    n += c == ',' && !quoted;
  }
  return n;
}

std::string csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  write_csv(out, rows);
  return out.str();
}

SweepSpec small(std::vector<KeyValue> extra = {}) {
  std::vector<KeyValue> kv{{"synthetic", "two-phase:100,100,0.5,10"}};
  kv.insert(kv.end(), extra.begin(), extra.end());
  return parse_config("", kv);
}

void expect_usage_naming(const std::string& text, const std::vector<KeyValue>& kv,
                         const std::string& key) {
  try {
    parse_config(text, kv);
    FAIL() << "expected UsageError for " << key;
  } catch (const UsageError& e) {
    EXPECT_NE(std::string(e.what()).find(key), std::string::npos) << e.what();
  }
}

}  // namespace

TEST(ParseConfig, Defaults) {
  const auto s = parse_config("");
  ASSERT_EQ(s.signals.size(), 1u);
  EXPECT_EQ(s.signals[0].label(), "two-phase:150,150,1,25,10");
  EXPECT_EQ(s.budgets, (std::vector<double>{0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}));
  EXPECT_EQ(s.modes.size(), 4u);
  EXPECT_EQ(s.seeds, (std::vector<std::uint64_t>{1}));
  EXPECT_FALSE(s.latencies_s.empty());
}

TEST(ParseConfig, SingleBudgetFlag) {
  const std::vector<KeyValue> kv{{"budget", "0.6"}};
  const auto s = parse_config("", kv);
  EXPECT_EQ(s.budgets, (std::vector<double>{0.6}));
  EXPECT_EQ(s.latencies_s, default_sweep_spec().latencies_s);
  EXPECT_EQ(s.modes.size(), 4u);
}

TEST(ParseConfig, BudgetRangeGivesSeven) {
  const auto s = parse_config("budgets = 0.3:0.9:0.1\n");
  EXPECT_EQ(s.budgets, (std::vector<double>{0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}));
}

TEST(ParseConfig, FlagsOverrideFile) {
  const std::vector<KeyValue> kv{{"budgets", "0.5"}, {"modes", "ei,seasons"}};
  const auto s = parse_config("budgets = 0.3,0.4  # comment\nseeds = 4,5\n", kv);
  EXPECT_EQ(s.budgets, (std::vector<double>{0.5}));
  EXPECT_EQ(s.modes, (std::vector<Mode>{Mode::kEi, Mode::kSeasons}));
  EXPECT_EQ(s.seeds, (std::vector<std::uint64_t>{4, 5}));
}

TEST(ParseConfig, ModelKeys) {
  const auto s = parse_config(
      "capacitor_uj = 800\nharvest_power_mw = 5\nk_max = 12\nrelease_fraction = 0.5\n"
      "guard_samples = 1.5\nsurplus_sampling = off\nqueue_capacity = 64\n"
      "sample_mw = 4.2\n");
  EXPECT_DOUBLE_EQ(s.model.capacitor_j, 800e-6);
  EXPECT_DOUBLE_EQ(*s.model.harvest_power_w, 5e-3);
  EXPECT_EQ(s.model.asa.k_max, 12);
  EXPECT_EQ(s.model.release_fraction, 0.5);
  EXPECT_EQ(*s.model.guard_samples, 1.5);
  EXPECT_FALSE(s.model.surplus_sampling);
  EXPECT_EQ(*s.model.queue_capacity, 64u);
  EXPECT_NEAR(s.model.costs().sample_j, 84e-6, 1e-15);
}

TEST(ParseConfig, ErrorsNameTheKey) {
  expect_usage_naming("", {{"latency", "-1"}}, "latency");
  expect_usage_naming("", {{"budgets", "1.5"}}, "budgets");
  expect_usage_naming("", {{"budgets", "abc"}}, "budgets");
  expect_usage_naming("colour = red\n", {}, "colour");
  expect_usage_naming("", {{"modes", "ei,battery"}}, "modes");
  expect_usage_naming("", {{"surplus_sampling", "maybe"}}, "surplus_sampling");
  expect_usage_naming("", {{"guard_samples", "-1"}}, "guard_samples");
  expect_usage_naming("", {{"synthetic", "sine:1,2"}}, "synthetic");
  expect_usage_naming("", {{"k_min", "5"}, {"k_max", "2"}}, "k_max");
  expect_usage_naming("budgets 0.5\n", {}, "line 1");
  EXPECT_THROW(parse_config_file(std::filesystem::path("/nonexistent/cfg")), UsageError);
}

TEST(SignalSpec, ParseSynthetic) {
  const auto s = SignalSpec::parse_synthetic("two-phase:10,20,0.5,4");
  EXPECT_EQ(s.volatile_len, 10u);
  EXPECT_EQ(s.flat_len, 20u);
  EXPECT_EQ(s.amplitude, 0.5);
  EXPECT_EQ(s.period, 4u);
  EXPECT_EQ(s.cycles, 1u);
  EXPECT_EQ(s.label(), "two-phase:10,20,0.5,4");
  EXPECT_EQ(s.materialize(3, 0.02).size(), 30u);
  EXPECT_EQ(SignalSpec::parse_synthetic("two-phase:10,20,0.5,4,3").materialize(3, 0.02).size(),
            90u);
  EXPECT_THROW(SignalSpec::parse_synthetic("two-phase:10,20"), InputError);
  EXPECT_THROW(SignalSpec::parse_synthetic("two-phase:0,20,1,4"), InputError);
  EXPECT_THROW(SignalSpec::parse_synthetic("two-phase:10,20,1,1"), InputError);
  EXPECT_THROW(SignalSpec::parse_synthetic("two-phase:10,20,-1,4"), InputError);
}

TEST(SignalSpec, DatasetFormatFromExtension) {
  const auto tsv = SignalSpec::dataset(kData / "tiny.tsv").materialize(0, 0.02);
  EXPECT_EQ(tsv.values, (std::vector<double>{0.5, 0.7, 0.1, -0.2, 0.3, 0.4}));
  const auto rows = SignalSpec::dataset(kData / "ramp.csv").materialize(0, 0.02);
  EXPECT_EQ(rows.size(), 400u);
  EXPECT_EQ(SignalSpec::dataset(kData / "ramp.csv").label(), "ramp");
}

TEST(RunSweep, Cardinality) {
  const auto spec = small({{"budgets", "0.5,0.6"}, {"latencies", "0.5,1"}});
  const auto rows = run_sweep(spec);
  ASSERT_EQ(rows.size(), 16u);
  // Nesting: budget, then latency, then mode.
  EXPECT_EQ(rows[0].budget, 0.5);
  EXPECT_EQ(rows[0].latency_s, 0.5);
  EXPECT_EQ(rows[0].mode, Mode::kEi);
  EXPECT_EQ(rows[3].mode, Mode::kSeasons);
  EXPECT_EQ(rows[4].latency_s, 1.0);
  EXPECT_EQ(rows[8].budget, 0.6);
  EXPECT_FALSE(has_errors(rows));
}

TEST(RunSweep, ReferenceColumns) {
  const auto rows = run_sweep(small({{"budgets", "0.4,0.6"}, {"latencies", "1,2"}}));
  for (const auto& r : rows) {
    ASSERT_TRUE(r.metrics);
    if (r.mode == Mode::kEi) EXPECT_EQ(*r.improvement, 0.0);
    if (r.mode == Mode::kSeb && r.normalized_improvement)
      EXPECT_EQ(*r.normalized_improvement, 1.0);
  }
}

TEST(RunSweep, ReferencesRunEvenWhenNotRequested) {
  const auto rows = run_sweep(small({{"budgets", "0.6"}, {"latencies", "2"}, {"modes", "seasons"}}));
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_TRUE(rows[0].improvement.has_value());
  EXPECT_TRUE(rows[0].normalized_improvement.has_value());
}

TEST(RunSweep, BenchmarkImprovementPositive) {
  const std::vector<KeyValue> kv{{"budgets", "0.6"}, {"latencies", "2"}, {"modes", "seasons"}};
  const auto rows = run_sweep(parse_config("", kv));
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_GT(*rows[0].improvement, 0.0);
}

TEST(RunSweep, ErrorsStayInTheirRows) {
  const auto rows = run_sweep(small({{"budgets", "0.6"}, {"latencies", "1"},
                                     {"harvest_power_mw", "0.5"}}));
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_TRUE(has_errors(rows));
  for (const auto& r : rows) {
    if (r.mode == Mode::kSeasons) {
      EXPECT_FALSE(r.error.empty());
      EXPECT_FALSE(r.metrics);
    } else {
      EXPECT_TRUE(r.error.empty()) << r.error;
    }
  }
  const auto text = lines_of(csv(rows));
  ASSERT_EQ(text.size(), 5u);
  for (const auto& line : text) EXPECT_EQ(columns(line), 14u) << line;
}

TEST(RunSweep, MissingDatasetIsARowError) {
  auto spec = small({{"budgets", "0.6"}, {"latencies", "1"}, {"modes", "ei"}});
  spec.signals = {SignalSpec::dataset(kData / "missing.csv")};
  const auto rows = run_sweep(spec);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_FALSE(rows[0].error.empty());
}

TEST(RunSweep, ParallelMatchesSerial) {
  const auto serial = small({{"budgets", "0.4,0.7"}, {"latencies", "0.5,2"}, {"seeds", "1,2"}});
  auto parallel = serial;
  parallel.jobs = 4;
  EXPECT_EQ(csv(run_sweep(serial)), csv(run_sweep(parallel)));
}

TEST(WriteCsv, ShapeAndDeterminism) {
  EXPECT_EQ(csv({}), std::string(kCsvHeader) + "\n");
  const auto spec = small({{"budgets", "0.6"}, {"latencies", "1"}, {"modes", "seasons"}});
  const auto once = csv(run_sweep(spec));
  const auto text = lines_of(once);
  ASSERT_EQ(text.size(), 2u);
  EXPECT_EQ(columns(text[0]), 14u);
  EXPECT_EQ(columns(text[1]), 14u);
  EXPECT_EQ(once, csv(run_sweep(spec)));
}

TEST(WriteCsv, FileOutput) {
  const auto path = std::filesystem::temp_directory_path() / "seasons_emit.csv";
  emit_csv({}, path);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, kCsvHeader);
  std::filesystem::remove(path);
  EXPECT_THROW(emit_csv({}, "/nonexistent/dir/out.csv"), InputError);
}

TEST(Trace, HeaderAndRows) {
  const auto spec = small({{"budgets", "0.6"}, {"latencies", "1"}, {"modes", "seasons"}});
  std::ostringstream trace;
  (void)run_sweep(spec, &trace);
  const auto text = lines_of(trace.str());
  ASSERT_EQ(text.size(), 201u);
  EXPECT_EQ(text[0],
            "signal,budget,latency_s,mode,seed,tick,charge_uj,queue_len,requested_rate,"
            "safe_rate,critical,event");
  EXPECT_EQ(text[1].rfind("\"two-phase:100,100,0.5,10\",0.6,1,seasons,1,0,", 0), 0u) << text[1];
}

TEST(MakeRunConfig, CopiesModel) {
  ModelParams m;
  m.guard_samples = 3.0;
  m.surplus_sampling = false;
  m.release_fraction = 0.6;
  const auto c = make_run_config(m, gen_two_phase(10, 10, 0.0, 4, 1), Mode::kSeasons, 0.5, 1.0, 9);
  EXPECT_EQ(*c.guard_samples, 3.0);
  EXPECT_FALSE(c.surplus_sampling);
  EXPECT_EQ(c.release_fraction, 0.6);
  EXPECT_EQ(c.seed, 9u);
  EXPECT_NEAR(c.costs.pipeline_j(), 214e-6, 1e-15);
}
