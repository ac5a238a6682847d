#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gravwave/config.hpp"
#include "gravwave/frequency.hpp"
#include "gravwave/probe.hpp"

namespace gravwave {

struct UnwrappedPhase {
  std::vector<double> phi;
  /// Sample indices whose increment was exactly +-pi; the raw increment is kept there.
  std::vector<std::size_t> ties;
};

/// Standard unwrapping: each increment is reduced into (-pi, pi). Valid when
/// the true per-sample change stays below pi in magnitude.
UnwrappedPhase unwrap_phase(std::span<const double> wrapped);
UnwrappedPhase unwrap_phase(std::span<const Complex> samples);

enum class RunDirection { up, down };

struct PhaseRun {
  Wavevector wavevector;
  double start = 0.0;
  double end = 0.0;
  RunDirection direction = RunDirection::up;
  double total_change = 0.0;
  /// total_change / (end - start).
  double mean_rate = 0.0;
  std::size_t first_sample = 0;
  std::size_t last_sample = 0;
};

struct RunDetectorOptions {
  double threshold = 6.283185307179586;
  double min_monotonicity = 0.8;
  /// Window length in samples.
  std::size_t window = 0;
};

/// Window of 5 linear periods of a mode with frequency omega, in samples.
std::size_t default_run_window(double omega, double sample_interval);

/// A window qualifies when |phi(end) - phi(start)| exceeds the threshold and at
/// least min_monotonicity of its increments share that sign. Overlapping
/// qualifying windows of one direction merge into a run, which is then trimmed
/// to start and end on increments in the run direction.
std::vector<PhaseRun> detect_phase_runs(std::span<const double> phi, double t0, double dt,
                                        const RunDetectorOptions& options, Wavevector wavevector = {});

/// Unwraps the probe's interaction-frame samples and detects runs with the
/// default window when options.window is 0.
std::vector<PhaseRun> detect_phase_runs(const ModeProbe& probe, RunDetectorOptions options = {});

/// Run rates paired with spectral offsets. A lab-frame component at nu > w
/// turns the phase of a_k at rate -(nu - w), so super-linear runs are the
/// decreasing ones and sub-linear runs the increasing ones. All values are
/// magnitudes.
struct RunRateRow {
  Wavevector wavevector;
  double k = 0.0;
  std::optional<double> superlinear_rate;
  std::optional<double> superlinear_offset;
  std::optional<double> sublinear_rate;
  std::optional<double> sublinear_offset;
};

/// One row per probe that has at least one run.
std::vector<RunRateRow> run_rate_vs_peak(std::span<const ModeProbe> probes, std::span<const std::vector<PhaseRun>> runs,
                                         std::span<const PeakReport> peaks);

struct RunEvents {
  Wavevector wavevector;
  double k = 0.0;
  std::vector<PhaseRun> runs;
};

struct AvalancheOptions {
  /// Open rings k_min < |k| < k_max.
  Ring low{13.0, 29.0};
  Ring high{30.0, 45.0};
  double bin_width = 1.0;
  double t_begin = 0.0;
  double t_end = 0.0;
  /// Lags examined: -max_lag_bins..max_lag_bins.
  int max_lag_bins = 50;
};

struct AvalancheSeries {
  std::vector<double> time;
  /// Percentage of ring modes with an active run in each bin.
  std::vector<double> low_percent;
  std::vector<double> high_percent;
  std::vector<int> lags;
  std::vector<double> correlation;
  /// Positive when the high ring trails the low ring.
  int best_lag_bins = 0;
  double best_lag_time = 0.0;
  double best_correlation = 0.0;
};

AvalancheSeries avalanche_series(std::span<const RunEvents> events, const AvalancheOptions& options);

/// Normalized cross-correlation of y shifted by lag against x over the overlap.
std::optional<double> lagged_correlation(std::span<const double> x, std::span<const double> y, int lag);

}  // namespace gravwave
