#pragma once

#include <span>
#include <vector>

#include "gravwave/state.hpp"

namespace gravwave {

/// Annulus of width `bin_width` centred on k_center.
struct SpectrumBin {
  double k_center = 0.0;
  /// Mean |k| of the modes in the bin.
  double k_mean = 0.0;
  std::size_t modes = 0;
  /// Mean of |b_k|^2 over the annulus.
  double n = 0.0;
  /// k_mean^4 * n.
  double compensated = 0.0;
};

struct WaveactionSpectrum {
  double bin_width = 1.0;
  std::vector<SpectrumBin> bins;
};

/// Angle-averaged waveaction from a per-mode field of |b_k|^2 (full grid,
/// storage order). Only retained, nonzero modes contribute; empty bins are omitted.
WaveactionSpectrum waveaction_spectrum(const SpectralGrid& grid, std::span<const double> mode_action,
                                       double bin_width = 1.0);
WaveactionSpectrum waveaction_spectrum(const SurfaceState& state, double g, double bin_width = 1.0);

/// Time average of |b_k|^2 over many states.
class SpectrumAccumulator {
 public:
  SpectrumAccumulator(GridPtr grid, double g);
  void add(const SurfaceState& state);
  std::size_t count() const noexcept { return count_; }
  /// Mean |b_k|^2 per mode so far.
  std::vector<double> mean_action() const;
  WaveactionSpectrum spectrum(double bin_width = 1.0) const;

 private:
  GridPtr grid_;
  double g_;
  std::vector<double> sum_;
  std::size_t count_ = 0;
};

struct PowerLawFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::size_t points = 0;
};

/// Least-squares line through (log k_mean, log n) for bins with
/// k_min <= k_center <= k_max. Throws AnalysisError with fewer than two points.
PowerLawFit fit_power_law(const WaveactionSpectrum& spectrum, double k_min, double k_max);

}  // namespace gravwave
