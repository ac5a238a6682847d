#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gravwave/config.hpp"
#include "gravwave/probe.hpp"

namespace gravwave {

struct HistogramOptions {
  /// Linear bins on [0, n).
  std::size_t linear_bins = 20;
  /// Logarithmic bins on [n, s_max].
  std::size_t log_bins = 40;
  /// Fits and moments are refused below this many samples.
  std::size_t min_samples = 1000;
  /// Exponential core is fitted over bins with upper edge <= core_limit * n.
  double core_limit = 2.0;
  std::vector<double> tail_thresholds{2.0, 3.0, 4.0, 5.0, 6.0};
};

/// Fitted density p(s) = exp(log_amplitude - s / n_fit).
struct ExponentialFit {
  double n_fit = 0.0;
  double log_amplitude = 0.0;
  double density(double s) const;
  /// Integral of the fitted density above s.
  double tail_mass(double s) const;
};

struct TailExcess {
  /// Threshold as a multiple of n.
  double threshold = 0.0;
  double measured = 0.0;
  double predicted = 0.0;
  double ratio() const { return predicted > 0.0 ? measured / predicted : 0.0; }
};

/// Histogram of s = |a|^2.
struct AmplitudeHistogram {
  Ring ring;
  std::vector<double> edges;
  std::vector<std::uint64_t> counts;
  std::uint64_t samples = 0;
  /// Sample mean of s.
  double n = 0.0;
  ExponentialFit core;
  std::vector<TailExcess> tails;

  /// counts / (samples * width); integrates to 1.
  double density(std::size_t bin) const;
  double bin_center(std::size_t bin) const { return 0.5 * (edges[bin] + edges[bin + 1]); }
};

AmplitudeHistogram amplitude_pdf(std::span<const double> s, const HistogramOptions& options = {}, Ring ring = {});

/// M^(p) / (p! n^p) for p = 1..p_max.
std::vector<double> moment_ratios(std::span<const double> s, int p_max, std::size_t min_samples = 1000);

/// Pools |a|^2 over every probe with |k| in the closed ring. With
/// `normalize`, each mode's samples are divided by that mode's mean so that
/// modes of different n_k share one scale.
std::vector<double> ring_samples(std::span<const ModeProbe> probes, Ring ring, bool normalize);

}  // namespace gravwave
