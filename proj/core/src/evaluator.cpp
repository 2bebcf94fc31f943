#include "seasons/evaluator.hpp"

#include <cmath>
#include <string>

#include "seasons/errors.hpp"

namespace seasons {

std::vector<double> reconstruct(const ReceivedLog& log, std::size_t horizon) {
  if (horizon == 0) throw InputError("reconstruction horizon must be >= 1");
  std::vector<double> out(horizon, 0.0);
  const auto& e = log.entries;
  if (e.empty()) return out;

  const Tick end = static_cast<Tick>(horizon);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i].first < 0 || e[i].first >= end)
      throw InputError("received tick " + std::to_string(e[i].first) +
                       " outside [0, horizon)");
    if (i > 0 && e[i].first <= e[i - 1].first)
      throw InputError("received ticks must be strictly increasing");
  }

  const auto at = [&out](Tick t) -> double& {
    return out[static_cast<std::size_t>(t)];
  };
  for (Tick t = 0; t <= e.front().first; ++t) at(t) = e.front().second;
  for (std::size_t i = 1; i < e.size(); ++i) {
    const auto [t0, v0] = e[i - 1];
    const auto [t1, v1] = e[i];
    const double span = static_cast<double>(t1 - t0);
    for (Tick t = t0 + 1; t < t1; ++t)
      at(t) = v0 + (v1 - v0) * (static_cast<double>(t - t0) / span);
    at(t1) = v1;
  }
  for (Tick t = e.back().first; t < end; ++t) at(t) = e.back().second;
  return out;
}

double mae(std::span<const double> recon, std::span<const double> truth) {
  if (recon.size() != truth.size())
    throw InputError("mae: length mismatch (" + std::to_string(recon.size()) +
                     " vs " + std::to_string(truth.size()) + ")");
  if (recon.empty()) throw InputError("mae of empty series");
  double sum = 0.0;
  for (std::size_t i = 0; i < recon.size(); ++i)
    sum += std::abs(recon[i] - truth[i]);
  return sum / static_cast<double>(recon.size());
}

std::optional<double> improvement(double mae_x, double mae_ei) {
  if (!(mae_ei > 0.0)) return std::nullopt;
  return (mae_ei - mae_x) / mae_ei;
}

std::optional<double> normalized_improvement(double imp_x, double imp_seb) {
  if (!(imp_seb > 0.0)) return std::nullopt;
  return imp_x / imp_seb;
}

}  // namespace seasons
