#include "seasons/sampling_policy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "seasons/errors.hpp"

namespace seasons {
namespace {

void check_rate(double rate) {
  if (!(rate > 0.0) || rate > 1.0)
    throw InputError("sampling rate must be in (0, 1], got " +
                     std::to_string(rate));
}

// Guards floor() against products such as 5 * 0.6 landing a hair below 3.
constexpr double kFloorSlack = 1e-9;

}  // namespace

bool uniform_decide(Tick tick, double rate) {
  check_rate(rate);
  const auto slots = [rate](Tick t) {
    return std::floor(static_cast<double>(t) * rate + kFloorSlack);
  };
  return slots(tick) > slots(tick - 1);
}

void AsaParams::validate() const {
  if (k_min < 1) throw InputError("k_min must be >= 1");
  if (k_max < k_min) throw InputError("k_max must be >= k_min");
  if (!(theta_step > 1.0)) throw InputError("theta_step must be > 1");
  if (!(ewma_weight > 0.0) || ewma_weight > 1.0)
    throw InputError("ewma_weight must be in (0, 1]");
  check_rate(target_rate);
}

PolicyState make_linear_asa(const AsaParams& params) {
  params.validate();
  PolicyState s;
  s.kind = PolicyKind::kLinearAsa;
  s.k_min = params.k_min;
  s.k_max = params.k_max;
  s.interval = std::clamp(static_cast<int>(std::lround(1.0 / params.target_rate)),
                          params.k_min, params.k_max);
  if (params.theta_init > 0.0) s.theta = params.theta_init;
  s.target_rate = params.target_rate;
  s.theta_step = params.theta_step;
  s.ewma_weight = params.ewma_weight;
  s.gap_ewma = 1.0 / params.target_rate;
  s.rate_ewma = params.target_rate;
  return s;
}

PolicyState asa_observe(const PolicyState& state, Tick tick, double value) {
  if (state.kind != PolicyKind::kLinearAsa)
    throw InputError("asa_observe on a non-ASA policy state");

  PolicyState s = state;
  if (s.last_value) {
    const double diff = std::abs(value - *s.last_value);
    if (!s.theta && diff > 0.0) s.theta = diff;

    const bool significant = s.theta && diff > *s.theta;
    s.interval = significant ? std::max(s.k_min, s.interval / 2)
                             : std::min(s.k_max, s.interval + 1);

    if (s.last_tick && tick > *s.last_tick) {
      const double gap = static_cast<double>(tick - *s.last_tick);
      s.gap_ewma += s.ewma_weight * (gap - s.gap_ewma);
      s.rate_ewma = std::clamp(1.0 / s.gap_ewma, 0.0, 1.0);
    }

    if (s.theta) {
      // Collecting too much: fewer differences should count as significant.
      if (s.rate_ewma > s.target_rate)
        *s.theta *= s.theta_step;
      else if (s.rate_ewma < s.target_rate)
        *s.theta = std::max(kThetaFloor, *s.theta / s.theta_step);
    }
  }
  s.prev_value = s.last_value;
  s.last_value = value;
  s.last_tick = tick;
  return s;
}

RateDecision asa_current_rate(const PolicyState& state) {
  return {1.0 / static_cast<double>(state.interval)};
}

UniformPolicy::UniformPolicy(double rate) : rate_(rate) { check_rate(rate); }

LinearAsaPolicy::LinearAsaPolicy(const AsaParams& params)
    : state_(make_linear_asa(params)) {}

void LinearAsaPolicy::observe(Tick tick, double value) {
  state_ = asa_observe(state_, tick, value);
}

RateDecision LinearAsaPolicy::current_rate() const {
  return asa_current_rate(state_);
}

}  // namespace seasons
