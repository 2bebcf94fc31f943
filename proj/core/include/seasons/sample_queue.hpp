#pragma once

#include <cstddef>
#include <deque>
#include <optional>

#include "seasons/types.hpp"

namespace seasons {

struct Sample {
  Tick tick = 0;
  double value = 0.0;
  Tick deadline = 0;  // last tick at which the sample may still be sent

  friend bool operator==(const Sample&, const Sample&) = default;
};

/// Current length plus windowed enqueue/dequeue rates, in samples per second.
struct QueueDynamics {
  std::size_t length = 0;
  double enqueue_rate = 0.0;
  double dequeue_rate = 0.0;
};

enum class EnqueueResult { kQueued, kOverflow };

/// Nonvolatile FIFO of samples awaiting processing and transmission.
///
/// With a per-run constant latency, FIFO order is also earliest-deadline
/// order, so drop_expired() only ever removes a prefix. The queue keeps
/// per-tick enqueue and dequeue counts for the dynamics window; the clock is
/// the latest tick passed to any operation or to advance_to().
class SampleQueue {
 public:
  explicit SampleQueue(double tick_period_s,
                       std::optional<std::size_t> capacity = std::nullopt,
                       double retention_s = 1.0);

  // Throws InputError if sample.deadline <= sample.tick. A full queue leaves
  // the queue untouched and reports kOverflow.
  [[nodiscard]] EnqueueResult enqueue(const Sample& sample);

  std::optional<Sample> dequeue_oldest(Tick now);

  // Removes every sample with deadline < now; returns how many.
  std::size_t drop_expired(Tick now);

  // Rates over the last `window_s` seconds ending at the current clock.
  // Throws InputError if window_s <= 0 or exceeds the retention window.
  [[nodiscard]] QueueDynamics dynamics(double window_s) const;

  void advance_to(Tick now);

  [[nodiscard]] std::size_t size() const noexcept { return items_.size(); }
  [[nodiscard]] bool empty() const noexcept { return items_.empty(); }
  [[nodiscard]] const Sample* head() const noexcept {
    return items_.empty() ? nullptr : &items_.front();
  }

  [[nodiscard]] std::size_t total_enqueued() const noexcept { return enqueued_; }
  [[nodiscard]] std::size_t total_dequeued() const noexcept { return dequeued_; }
  [[nodiscard]] std::size_t total_expired() const noexcept { return expired_; }

 private:
  struct TickCounts {
    Tick tick;
    std::size_t enqueues;
    std::size_t dequeues;
  };

  TickCounts& counts_at(Tick now);
  void prune();
  [[nodiscard]] Tick window_ticks(double window_s) const;

  std::deque<Sample> items_;
  std::deque<TickCounts> history_;
  double tick_period_s_;
  std::optional<std::size_t> capacity_;
  Tick retention_ticks_;
  Tick clock_ = 0;
  std::size_t enqueued_ = 0;
  std::size_t dequeued_ = 0;
  std::size_t expired_ = 0;
};

}  // namespace seasons
