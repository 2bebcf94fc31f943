#include "seasons/sim_engine.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "seasons/errors.hpp"
#include "seasons/sample_queue.hpp"
#include "seasons/scheduler.hpp"

namespace seasons {

std::string_view to_string(Mode mode) noexcept {
  switch (mode) {
    case Mode::kEi: return "ei";
    case Mode::kSeb: return "seb";
    case Mode::kSeasonsNoLg: return "seasons_nolg";
    case Mode::kSeasons: return "seasons";
  }
  return "?";
}

Mode parse_mode(std::string_view name) {
  for (Mode m : kAllModes)
    if (to_string(m) == name) return m;
  throw InputError("unknown mode '" + std::string(name) +
                   "' (expected ei, seb, seasons_nolg or seasons)");
}

void RunConfig::validate() const {
  ground_truth.validate();
  if (!(budget_rate > 0.0) || budget_rate > 1.0)
    throw InputError("budget_rate must be in (0, 1]");
  if (!(latency_s > 0.0)) throw InputError("latency must be > 0");
  costs.validate();
  if (!(capacitor_j > 0.0)) throw InputError("capacitor must be > 0");
  if (harvest_power_w && !(*harvest_power_w >= 0.0))
    throw InputError("harvest power must be >= 0");
  if (!(initial_charge_fraction >= 0.0) || initial_charge_fraction > 1.0)
    throw InputError("initial_charge_fraction must be in [0, 1]");
  if (target_rate && (!(*target_rate > 0.0) || *target_rate > 1.0))
    throw InputError("target_rate must be in (0, 1]");
  if (!(window_s > 0.0)) throw InputError("window must be > 0");
  if (queue_capacity && *queue_capacity == 0)
    throw InputError("queue_capacity must be >= 1");
}

namespace {

bool time_buffered(Mode mode) {
  return mode == Mode::kSeasonsNoLg || mode == Mode::kSeasons;
}

std::unique_ptr<SamplingPolicy> make_policy(const RunConfig& config) {
  if (config.mode == Mode::kEi)
    return std::make_unique<UniformPolicy>(config.budget_rate);
  AsaParams params = config.asa;
  params.target_rate = config.target_rate.value_or(config.budget_rate);
  return std::make_unique<LinearAsaPolicy>(params);
}

}  // namespace

RunMetrics run(const RunConfig& config, const TickObserver& observer) {
  config.validate();
  const GroundTruth& gt = config.ground_truth;
  const double dt = gt.tick_period;
  const double f_max = config.f_max_hz();
  const auto horizon = static_cast<Tick>(gt.size());
  const Tick latency_ticks =
      std::max<Tick>(1, std::llround(config.latency_s / dt));
  const TaskCosts& costs = config.costs;

  const double power = config.harvest_power_w.value_or(
      budget_to_power(config.budget_rate, costs, f_max));

  EnergyState initial;
  initial.harvest_power_w = power;
  if (config.mode == Mode::kSeb) {
    // A battery holding the whole run's energy budget, charged at start.
    initial.capacity_j =
        std::max(config.capacitor_j, power * gt.duration());
    initial.charge_j = initial.capacity_j;
  } else {
    initial.capacity_j = config.capacitor_j;
    initial.charge_j = config.initial_charge_fraction * config.capacitor_j;
  }
  EnergyStore store(initial);

  std::optional<ControllerState> controller;
  if (config.mode == Mode::kSeasons)
    controller = make_controller_state(power, costs, config.budget_rate, f_max,
                                       config.latency_s,
                                       config.release_fraction,
                                       config.guard_samples);

  const auto policy = make_policy(config);
  SampleQueue queue(dt, config.queue_capacity, config.window_s);
  const bool enforce_freshness = time_buffered(config.mode);
  SchedulerConfig sched;
  sched.max_dequeues_per_tick = config.max_dequeues_per_tick;
  sched.surplus_sampling = config.mode != Mode::kEi && config.surplus_sampling;
  sched.tick_period_s = dt;
  if (controller)
    sched.admission_horizon_s = static_cast<double>(latency_ticks) * dt;
  Scheduler scheduler(sched);

  RunMetrics m;
  m.capacity_j = initial.capacity_j;
  m.harvest_power_w = power;
  m.energy_initial_j = initial.charge_j;
  if (controller) m.critical_count = controller->critical_count;
  m.received_log.entries.reserve(gt.size());
  m.delivered_at.reserve(gt.size());

  const auto window_ticks =
      static_cast<std::size_t>(std::max<Tick>(1, std::llround(config.window_s / dt)));
  WindowEnergy window;
  double consumed_mark = 0.0;
  double clamped_mark = 0.0;

  for (Tick t = 0; t < horizon; ++t) {
    const auto idx = static_cast<std::size_t>(t);
    queue.advance_to(t);
    store.harvest(dt);

    std::size_t expired_now = enforce_freshness ? queue.drop_expired(t) : 0;

    const double requested = policy->current_rate().requested_rate;
    const double rate =
        controller ? safe_rate(requested, queue.size(), *controller, f_max)
                   : requested;

    const TickPlan plan =
        scheduler.plan_tick(rate, store.state(), costs, queue.size());

    bool sampled = false;
    bool failed = false;
    if (plan.take_sample) {
      if (store.try_consume(costs.sample_j)) {
        sampled = true;
        ++m.samples_taken;
        const Sample s{t, gt.values[idx], t + latency_ticks};
        if (queue.enqueue(s) == EnqueueResult::kOverflow) ++expired_now;
        // Surplus samples stay out of the policy's budget tracking.
        if (!plan.surplus) policy->observe(t, s.value);
      } else {
        failed = true;
        ++m.power_failures;
      }
    }

    std::size_t sent_now = 0;
    for (std::size_t k = 0; k < plan.n_dequeues && !queue.empty(); ++k) {
      if (!store.try_consume(costs.service_j())) break;
      const auto s = queue.dequeue_oldest(t);
      m.received_log.entries.emplace_back(s->tick, s->value);
      m.delivered_at.push_back(t);
      ++sent_now;
    }
    m.samples_sent += sent_now;
    m.samples_expired += expired_now;
    m.max_queue_len = std::max(m.max_queue_len, queue.size());

    ++window.ticks;
    if (window.ticks == window_ticks || t + 1 == horizon) {
      window.consumed_j = store.consumed_j() - consumed_mark;
      window.clamped_j = store.clamped_j() - clamped_mark;
      consumed_mark = store.consumed_j();
      clamped_mark = store.clamped_j();
      m.per_window_energy.push_back(window);
      window = {};
    }

    if (observer) {
      TickRecord r;
      r.tick = t;
      r.charge_j = store.charge_j();
      r.capacity_j = store.state().capacity_j;
      r.queue_len = queue.size();
      r.requested_rate = requested;
      r.safe_rate = rate;
      r.in_critical = controller && controller->in_critical;
      r.sampled = sampled;
      r.surplus = sampled && plan.surplus;
      r.power_failure = failed;
      r.expired = expired_now;
      r.sent = sent_now;
      r.samples_taken = m.samples_taken;
      r.samples_sent = m.samples_sent;
      r.samples_expired = m.samples_expired;
      r.conservation_residual_j = store.conservation_residual();
      observer(r);
    }
  }

  m.queue_residual = queue.size();
  m.energy_harvested_j = store.harvested_j();
  m.energy_consumed_j = store.consumed_j();
  m.energy_clamped_j = store.clamped_j();
  m.energy_final_j = store.charge_j();
  if (controller) m.critical_entries = controller->critical_entries;

  m.degenerate_reconstruction = m.received_log.empty();
  m.mae = mae(reconstruct(m.received_log, gt.size()), gt);
  return m;
}

std::vector<RunMetrics> compare_modes(const RunConfig& base,
                                      std::span<const Mode> modes) {
  std::vector<RunMetrics> out;
  out.reserve(modes.size());
  for (Mode mode : modes) {
    RunConfig c = base;
    c.mode = mode;
    out.push_back(run(c));
  }
  return out;
}

std::optional<double> consumption_cov(const RunMetrics& metrics,
                                      bool steady_only) {
  const auto& w = metrics.per_window_energy;
  if (w.size() < 2) return std::nullopt;
  const std::size_t full = w.front().ticks;
  std::vector<double> xs;
  for (std::size_t i = steady_only ? 1 : 0; i < w.size(); ++i)
    if (w[i].ticks == full) xs.push_back(w[i].consumed_j);
  if (xs.size() < 2) return std::nullopt;
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  if (!(mean > 0.0)) return std::nullopt;
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(xs.size())) / mean;
}

}  // namespace seasons
