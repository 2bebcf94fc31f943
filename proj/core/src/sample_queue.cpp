#include "seasons/sample_queue.hpp"

#include <algorithm>
#include <cmath>

#include "seasons/errors.hpp"

namespace seasons {

SampleQueue::SampleQueue(double tick_period_s,
                         std::optional<std::size_t> capacity,
                         double retention_s)
    : tick_period_s_(tick_period_s), capacity_(capacity) {
  if (!(tick_period_s > 0.0)) throw InputError("tick_period must be > 0");
  if (!(retention_s > 0.0)) throw InputError("retention window must be > 0");
  retention_ticks_ = window_ticks(retention_s);
}

Tick SampleQueue::window_ticks(double window_s) const {
  return std::max<Tick>(1, std::llround(window_s / tick_period_s_));
}

void SampleQueue::advance_to(Tick now) {
  clock_ = std::max(clock_, now);
  prune();
}

void SampleQueue::prune() {
  while (!history_.empty() && history_.front().tick <= clock_ - retention_ticks_)
    history_.pop_front();
}

SampleQueue::TickCounts& SampleQueue::counts_at(Tick now) {
  advance_to(now);
  if (history_.empty() || history_.back().tick != clock_)
    history_.push_back({clock_, 0, 0});
  return history_.back();
}

EnqueueResult SampleQueue::enqueue(const Sample& sample) {
  if (sample.deadline <= sample.tick)
    throw InputError("sample deadline must be after its collection tick");
  if (capacity_ && items_.size() >= *capacity_) return EnqueueResult::kOverflow;
  items_.push_back(sample);
  ++counts_at(sample.tick).enqueues;
  ++enqueued_;
  return EnqueueResult::kQueued;
}

std::optional<Sample> SampleQueue::dequeue_oldest(Tick now) {
  advance_to(now);
  if (items_.empty()) return std::nullopt;
  Sample head = items_.front();
  items_.pop_front();
  ++counts_at(now).dequeues;
  ++dequeued_;
  return head;
}

std::size_t SampleQueue::drop_expired(Tick now) {
  advance_to(now);
  std::size_t dropped = 0;
  while (!items_.empty() && items_.front().deadline < now) {
    items_.pop_front();
    ++dropped;
  }
  expired_ += dropped;
  return dropped;
}

QueueDynamics SampleQueue::dynamics(double window_s) const {
  if (!(window_s > 0.0)) throw InputError("dynamics window must be > 0");
  const Tick span = window_ticks(window_s);
  if (span > retention_ticks_)
    throw InputError("dynamics window exceeds the queue's retention window");

  std::size_t enq = 0;
  std::size_t deq = 0;
  for (auto it = history_.rbegin(); it != history_.rend(); ++it) {
    if (it->tick <= clock_ - span) break;
    enq += it->enqueues;
    deq += it->dequeues;
  }
  const double seconds = static_cast<double>(span) * tick_period_s_;
  return {items_.size(), static_cast<double>(enq) / seconds,
          static_cast<double>(deq) / seconds};
}

}  // namespace seasons
