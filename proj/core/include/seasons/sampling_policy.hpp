#pragma once

#include <memory>
#include <optional>

#include "seasons/types.hpp"

namespace seasons {

/// Even spread achieving exactly `rate` of all ticks over any long window:
/// true iff floor(tick * rate) > floor((tick - 1) * rate). Tick 0 always
/// samples.
bool uniform_decide(Tick tick, double rate);

enum class PolicyKind { kUniform, kLinearAsa };

struct AsaParams {
  int k_min = 1;
  int k_max = 10;
  // <= 0 selects the first non-zero difference seen as the initial threshold.
  double theta_init = 0.0;
  double theta_step = 1.05;
  double ewma_weight = 0.01;
  double target_rate = 0.6;

  void validate() const;
};

// Lower bound for the adaptive threshold so multiplicative nudges can always
// recover from a long run of zero differences.
inline constexpr double kThetaFloor = 1e-12;

/// Linear ASA state. The ASA compares the difference between consecutive taken
/// samples to an adaptive threshold: a significant difference halves the
/// sampling interval, an insignificant one lengthens it by one tick. The
/// threshold is then nudged so the collection-rate average tracks the target.
struct PolicyState {
  PolicyKind kind = PolicyKind::kLinearAsa;
  int interval = 1;
  int k_min = 1;
  int k_max = 10;
  std::optional<double> last_value;
  std::optional<double> prev_value;
  // Empty until the first non-zero difference when auto-initialised.
  std::optional<double> theta;
  double rate_ewma = 0.0;
  double target_rate = 0.6;
  double theta_step = 1.05;
  double ewma_weight = 0.01;

  // Average gap between taken samples in ticks; rate_ewma == 1 / gap_ewma.
  // Averaging gaps per sample rather than per-sample rates keeps the tracked
  // rate an unbiased estimate of samples per tick.
  double gap_ewma = 1.0;
  std::optional<Tick> last_tick;
};

PolicyState make_linear_asa(const AsaParams& params);

// Observe one taken sample. `tick` is when it was taken and is used to measure
// the actual gap, which differs from `interval` when the controller caps the
// rate.
PolicyState asa_observe(const PolicyState& state, Tick tick, double value);

struct RateDecision {
  double requested_rate = 1.0;  // fraction of f_max, in (0, 1]
};

RateDecision asa_current_rate(const PolicyState& state);

/// The interface the controller and scheduler see. Any ASA plugs in here.
class SamplingPolicy {
 public:
  virtual ~SamplingPolicy() = default;

  virtual void observe(Tick tick, double value) = 0;
  [[nodiscard]] virtual RateDecision current_rate() const = 0;
  [[nodiscard]] virtual PolicyKind kind() const noexcept = 0;
};

class UniformPolicy final : public SamplingPolicy {
 public:
  explicit UniformPolicy(double rate);

  void observe(Tick, double) override {}
  [[nodiscard]] RateDecision current_rate() const override { return {rate_}; }
  [[nodiscard]] PolicyKind kind() const noexcept override {
    return PolicyKind::kUniform;
  }

 private:
  double rate_;
};

class LinearAsaPolicy final : public SamplingPolicy {
 public:
  explicit LinearAsaPolicy(const AsaParams& params);

  void observe(Tick tick, double value) override;
  [[nodiscard]] RateDecision current_rate() const override;
  [[nodiscard]] PolicyKind kind() const noexcept override {
    return PolicyKind::kLinearAsa;
  }
  [[nodiscard]] const PolicyState& state() const noexcept { return state_; }

 private:
  PolicyState state_;
};

}  // namespace seasons
