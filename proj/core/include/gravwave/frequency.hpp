#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gravwave/probe.hpp"

namespace gravwave {

struct WelchOptions {
  std::size_t window = 4096;
  double overlap = 0.5;
};

/// Averaged Hann-windowed periodogram. A component exp(-i nu t) appears at
/// frequency +nu; frequencies are ascending over [-pi/dt, pi/dt).
struct Periodogram {
  std::vector<double> frequency;
  std::vector<double> power;
  std::size_t segments = 0;
  double resolution() const { return frequency.size() > 1 ? frequency[1] - frequency[0] : 0.0; }
};

/// Throws AnalysisError if the series is shorter than one window.
Periodogram welch_periodogram(std::span<const Complex> samples, double dt, const WelchOptions& options = {});

struct SpectralPeak {
  double frequency = 0.0;
  double power = 0.0;
};

struct PeakOptions {
  WelchOptions welch;
  /// The main peak is the strongest local maximum with |nu - w| <= main_band * w.
  double main_band = 0.25;
  /// Secondary (sub-linear) peaks are searched above (below) w * (1 +- separation).
  double separation = 0.15;
  /// A side peak must exceed noise_factor times the median power at nu > 0.
  double noise_factor = 10.0;
  /// Bins within this distance of the main peak are left out of the below/above totals.
  std::size_t main_exclusion_bins = 3;
};

struct PeakReport {
  double omega_linear = 0.0;
  SpectralPeak main;
  std::optional<SpectralPeak> secondary;
  std::optional<SpectralPeak> sub_linear;
  /// (nu_secondary / nu_main)^2.
  std::optional<double> squared_ratio;
  /// P_secondary / P_main.
  std::optional<double> power_ratio;
  double power_below = 0.0;
  double power_above = 0.0;
  /// Every local maximum, strongest first.
  std::vector<SpectralPeak> peaks;
};

/// `samples` are lab-frame values, so the linear oscillation sits near omega_linear.
PeakReport frequency_peaks(std::span<const Complex> samples, double dt, double omega_linear,
                           const PeakOptions& options = {});
PeakReport frequency_peaks(const ModeProbe& probe, const PeakOptions& options = {});

}  // namespace gravwave
