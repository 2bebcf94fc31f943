#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "seasons/energy_model.hpp"
#include "seasons/errors.hpp"

using namespace seasons;

namespace {
constexpr double kUj = 1e-6;
}

TEST(DeriveCosts, EdgeSensorTable) {
  const auto c = edge_sensor_costs();
  EXPECT_NEAR(c.sample_j, 42 * kUj, 1e-15);
  EXPECT_NEAR(c.process_j, 4 * kUj, 1e-15);
  EXPECT_NEAR(c.transmit_j, 168 * kUj, 1e-15);
  EXPECT_NEAR(c.pipeline_j(), 214 * kUj, 1e-15);
  EXPECT_NEAR(c.service_j(), 172 * kUj, 1e-15);
  // Total table power over the same window gives the same pipeline cost.
  EXPECT_NEAR(10.7e-3 * 1.0 / 50.0, c.pipeline_j(), 1e-15);
}

TEST(DeriveCosts, UnitCaseAndLinearity) {
  const auto c = derive_costs({1.0, 1.0, 1.0}, 1.0, 1.0);
  EXPECT_EQ(c.sample_j, 1.0);
  EXPECT_EQ(c.process_j, 1.0);
  EXPECT_EQ(c.transmit_j, 1.0);

  const auto a = derive_costs(kEdgeSensorPowers, 50.0, 1.0);
  const auto b = derive_costs(kEdgeSensorPowers, 100.0, 1.0);
  EXPECT_DOUBLE_EQ(b.sample_j * 2, a.sample_j);
  EXPECT_DOUBLE_EQ(b.process_j * 2, a.process_j);
  EXPECT_DOUBLE_EQ(b.transmit_j * 2, a.transmit_j);
}

TEST(DeriveCosts, RejectsNonPositive) {
  EXPECT_THROW(derive_costs({0.0, 1.0, 1.0}, 1.0, 1.0), InputError);
  EXPECT_THROW(derive_costs({1.0, -1.0, 1.0}, 1.0, 1.0), InputError);
  EXPECT_THROW(derive_costs({1.0, 1.0, 1.0}, 0.0, 1.0), InputError);
  EXPECT_THROW(derive_costs({1.0, 1.0, 1.0}, 1.0, 0.0), InputError);
  EXPECT_THROW((TaskCosts{1.0, 0.0, 1.0}.validate()), InputError);
}

TEST(Harvest, Examples) {
  const EnergyState s{100 * kUj, 500 * kUj, 6.42e-3};
  const auto h = harvest(s, 0.02);
  EXPECT_NEAR(h.charge_j, 228.4 * kUj, 1e-12);
  EXPECT_EQ(h.capacity_j, s.capacity_j);
  EXPECT_EQ(h.harvest_power_w, s.harvest_power_w);

  const EnergyState full{500 * kUj, 500 * kUj, 6.42e-3};
  EXPECT_EQ(harvest(full, 0.02), full);

  const EnergyState idle{100 * kUj, 500 * kUj, 0.0};
  EXPECT_EQ(harvest(idle, 0.02), idle);

  EXPECT_THROW(harvest(s, 0.0), InputError);
}

TEST(TryConsume, Examples) {
  const EnergyState s{228.4 * kUj, 500 * kUj, 0.0};
  auto r = try_consume(s, 214 * kUj);
  EXPECT_TRUE(r.success);
  EXPECT_NEAR(r.state.charge_j, 14.4 * kUj, 1e-12);

  const EnergyState low{10 * kUj, 500 * kUj, 0.0};
  r = try_consume(low, 42 * kUj);
  EXPECT_FALSE(r.success);
  EXPECT_EQ(r.state, low);

  r = try_consume(low, 0.0);
  EXPECT_TRUE(r.success);
  EXPECT_EQ(r.state, low);

  EXPECT_THROW(try_consume(low, -1e-6), InputError);
}

TEST(BudgetToPower, Examples) {
  const auto c = edge_sensor_costs();
  EXPECT_NEAR(budget_to_power(0.6, c, 50.0), 6.42e-3, 1e-12);
  EXPECT_NEAR(budget_to_power(1.0, c, 50.0), 10.7e-3, 1e-12);
  EXPECT_DOUBLE_EQ(budget_to_power(0.5, TaskCosts{1.0, 0.5, 0.5}, 1.0), 1.0);
  EXPECT_THROW(budget_to_power(0.0, c, 50.0), InputError);
  EXPECT_THROW(budget_to_power(1.01, c, 50.0), InputError);
  EXPECT_THROW(budget_to_power(0.5, c, 0.0), InputError);
}

TEST(EnergyStore, RejectsBadInitialState) {
  EXPECT_THROW(EnergyStore({0.0, 0.0, 0.0}), InputError);
  EXPECT_THROW(EnergyStore({2.0, 1.0, 0.0}), InputError);
  EXPECT_THROW(EnergyStore({-1.0, 1.0, 0.0}), InputError);
  EXPECT_THROW(EnergyStore({0.5, 1.0, -1.0}), InputError);
}

// Random harvest/consume sequences: bounds, all-or-nothing and conservation.
TEST(EnergyStore, RandomSequencesConserveEnergy) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double cap = 100 * kUj + unit(rng) * 900 * kUj;
    const double power = unit(rng) * 20e-3;
    EnergyStore store({unit(rng) * cap, cap, power});
    for (int step = 0; step < 500; ++step) {
      if (unit(rng) < 0.4) {
        store.harvest(0.001 + unit(rng) * 0.05);
      } else {
        const double cost = unit(rng) * 300 * kUj;
        const auto before = store.state();
        const bool ok = store.try_consume(cost);
        if (!ok) {
          EXPECT_EQ(store.state(), before);
          EXPECT_LT(before.charge_j, cost);
        }
      }
      ASSERT_GE(store.charge_j(), 0.0);
      ASSERT_LE(store.charge_j(), cap);
      ASSERT_NEAR(store.conservation_residual(), 0.0, 1e-9);
    }
  }
}

TEST(EnergyStore, ClampLossIsTracked) {
  EnergyStore store({400 * kUj, 500 * kUj, 10e-3});
  store.harvest(0.02);  // +200 uJ, 100 uJ fits
  EXPECT_NEAR(store.charge_j(), 500 * kUj, 1e-15);
  EXPECT_NEAR(store.clamped_j(), 100 * kUj, 1e-15);
  EXPECT_NEAR(store.harvested_j(), 200 * kUj, 1e-15);
  ASSERT_TRUE(store.try_consume(214 * kUj));
  EXPECT_NEAR(store.consumed_j(), 214 * kUj, 1e-15);
  EXPECT_NEAR(store.conservation_residual(), 0.0, 1e-15);
}
