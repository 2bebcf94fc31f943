#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "seasons/signal_source.hpp"
#include "seasons/types.hpp"

namespace seasons {

/// What the server received, in transmission order. Ticks strictly increase.
struct ReceivedLog {
  std::vector<std::pair<Tick, double>> entries;

  [[nodiscard]] bool empty() const noexcept { return entries.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return entries.size(); }

  friend bool operator==(const ReceivedLog&, const ReceivedLog&) = default;
};

/// Linear interpolation between received ticks. Before the first and after
/// the last received tick the nearest received value is held; an empty log
/// reconstructs as all zeros. Ticks must be strictly increasing and lie in
/// [0, horizon).
std::vector<double> reconstruct(const ReceivedLog& log, std::size_t horizon);

double mae(std::span<const double> recon, std::span<const double> truth);
inline double mae(std::span<const double> recon, const GroundTruth& gt) {
  return mae(recon, std::span<const double>(gt.values));
}

// (mae_ei - mae_x) / mae_ei; empty when mae_ei == 0.
std::optional<double> improvement(double mae_x, double mae_ei);

// imp_x / imp_seb; empty when imp_seb <= 0.
std::optional<double> normalized_improvement(double imp_x, double imp_seb);

}  // namespace seasons
