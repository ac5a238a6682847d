#pragma once

#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "gravwave/spectral_field.hpp"

namespace gravwave {

enum class ForcingMode { clamp_modulus, rerandomize_phase };

/// gamma(k) = low_coeff * (low_threshold - k)^low_exponent for k < low_threshold,
///            0 on [low_threshold, high_threshold],
///            high_coeff * (k - high_threshold)^high_exponent above.
struct DampingProfile {
  double low_coeff = 5.0;
  double low_threshold = 6.0;
  double low_exponent = 1.5;
  double high_coeff = 0.028;
  double high_threshold = 64.0;
  double high_exponent = 2.0;

  friend bool operator==(const DampingProfile&, const DampingProfile&) = default;
};

struct DriveConfig {
  double k_low = 6.0;
  double k_high = 9.0;
  double amplitude_prefactor = 2.0 * std::numbers::pi * std::numbers::pi * std::numbers::pi;
  double eta_exponent = -7.0 / 4.0;
  double psi_exponent = -9.0 / 4.0;
  DampingProfile damping;
  ForcingMode forcing_mode = ForcingMode::clamp_modulus;
  bool forcing_enabled = true;
  bool damping_enabled = true;

  friend bool operator==(const DriveConfig&, const DriveConfig&) = default;
};

enum class ProbeVariable { normal, eta };

struct Ring {
  double k_min = 0.0;
  double k_max = 0.0;
  bool contains(double k) const noexcept { return k >= k_min && k <= k_max; }
  bool contains_open(double k) const noexcept { return k > k_min && k < k_max; }
  friend bool operator==(const Ring&, const Ring&) = default;
};

struct ProbeConfig {
  std::vector<Wavevector> modes;
  /// Every grid mode with |k| inside one of these closed rings is probed as well.
  std::vector<Ring> rings;
  ProbeVariable variable = ProbeVariable::normal;
  int sample_every = 1;

  friend bool operator==(const ProbeConfig&, const ProbeConfig&) = default;
};

struct OutputConfig {
  std::string directory = "output";
  double checkpoint_every_periods = 10.0;
  /// Durations are measured in linear periods of a mode with this |k|.
  double reference_k = 10.0;

  friend bool operator==(const OutputConfig&, const OutputConfig&) = default;
};

struct GridConfig {
  int n_x = 256;
  int n_y = 256;
  double box_length = 2.0 * std::numbers::pi;
  double dealias_fraction = 0.5;

  friend bool operator==(const GridConfig&, const GridConfig&) = default;
};

struct SimConfig {
  GridConfig grid;
  double g = 1.0;
  double epsilon = 2e-2;
  /// Fixed time step; 0 selects T_min / steps_per_period, T_min being the
  /// period of the shortest wave on the grid axis.
  double dt = 0.0;
  double steps_per_period = 35.0;
  std::uint64_t seed = 1;
  /// Abort when the embedded 7th/8th order discrepancy exceeds this.
  double error_abort_threshold = std::numeric_limits<double>::infinity();
  DriveConfig drive;
  ProbeConfig probes;
  OutputConfig output;

  GridPtr make_grid() const;
  double time_step() const;
  /// Linear period 2*pi / sqrt(g * k_ref) of the reference mode.
  double reference_period() const;
  /// Throws ConfigError naming the offending key.
  void validate() const;

  friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

}  // namespace gravwave
