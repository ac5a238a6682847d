#include "gravwave/config.hpp"

#include <algorithm>
#include <cmath>

#include "gravwave/errors.hpp"

namespace gravwave {

GridPtr SimConfig::make_grid() const {
  return std::make_shared<const SpectralGrid>(grid.n_x, grid.n_y, grid.box_length, grid.dealias_fraction);
}

double SimConfig::time_step() const {
  if (dt > 0.0) return dt;
  const double k_axis = (2.0 * std::numbers::pi / grid.box_length) * std::max(grid.n_x, grid.n_y) / 2.0;
  const double t_min = 2.0 * std::numbers::pi / std::sqrt(g * k_axis);
  return t_min / steps_per_period;
}

double SimConfig::reference_period() const { return 2.0 * std::numbers::pi / std::sqrt(g * output.reference_k); }

void SimConfig::validate() const {
  if (grid.n_x <= 0 || grid.n_x % 2 != 0) throw ConfigError("grid.n_x", 0, "must be an even positive integer");
  if (grid.n_y <= 0 || grid.n_y % 2 != 0) throw ConfigError("grid.n_y", 0, "must be an even positive integer");
  if (!(grid.box_length > 0.0) || !std::isfinite(grid.box_length)) throw ConfigError("grid.box_length", 0, "must be positive");
  if (!(grid.dealias_fraction > 0.0 && grid.dealias_fraction <= 1.0))
    throw ConfigError("grid.dealias_fraction", 0, "must lie in (0, 1]");
  if (!(g > 0.0) || !std::isfinite(g)) throw ConfigError("physics.g", 0, "must be positive");
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) throw ConfigError("physics.epsilon", 0, "must be non-negative");
  if (!(dt >= 0.0) || !std::isfinite(dt)) throw ConfigError("physics.dt", 0, "must be positive (or 0 for automatic)");
  if (!(steps_per_period > 0.0)) throw ConfigError("physics.steps_per_period", 0, "must be positive");
  if (!(error_abort_threshold > 0.0)) throw ConfigError("physics.error_abort_threshold", 0, "must be positive");

  const double unit_k = 2.0 * std::numbers::pi / grid.box_length;
  const double cutoff = unit_k * grid.dealias_fraction * std::min(grid.n_x, grid.n_y) / 2.0;
  if (!(drive.k_low > 0.0)) throw ConfigError("drive.k_low", 0, "must be positive");
  if (!(drive.k_high > drive.k_low)) throw ConfigError("drive.k_high", 0, "must exceed drive.k_low");
  if (!(drive.k_high < cutoff))
    throw ConfigError("drive.k_high", 0, "must lie below the dealias cutoff " + std::to_string(cutoff));
  if (!(drive.amplitude_prefactor >= 0.0)) throw ConfigError("drive.amplitude_prefactor", 0, "must be non-negative");
  const auto& d = drive.damping;
  if (!(d.low_coeff >= 0.0)) throw ConfigError("drive.damping_low_coeff", 0, "must be non-negative");
  if (!(d.high_coeff >= 0.0)) throw ConfigError("drive.damping_high_coeff", 0, "must be non-negative");
  if (!(d.low_exponent >= 0.0)) throw ConfigError("drive.damping_low_exponent", 0, "must be non-negative");
  if (!(d.high_exponent >= 0.0)) throw ConfigError("drive.damping_high_exponent", 0, "must be non-negative");
  if (!(d.low_threshold >= 0.0)) throw ConfigError("drive.damping_low_threshold", 0, "must be non-negative");
  if (!(d.high_threshold >= d.low_threshold))
    throw ConfigError("drive.damping_high_threshold", 0, "must not lie below drive.damping_low_threshold");

  if (probes.sample_every < 1) throw ConfigError("probes.sample_every", 0, "must be at least 1");
  for (const auto& r : probes.rings)
    if (!(r.k_min >= 0.0 && r.k_max >= r.k_min)) throw ConfigError("probes.rings", 0, "ring bounds must satisfy 0 <= k_min <= k_max");

  if (!(output.checkpoint_every_periods >= 0.0))
    throw ConfigError("output.checkpoint_every_periods", 0, "must be non-negative");
  if (!(output.reference_k > 0.0)) throw ConfigError("output.reference_k", 0, "must be positive");
}

}  // namespace gravwave
