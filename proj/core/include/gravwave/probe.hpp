#pragma once

#include <span>
#include <vector>

#include "gravwave/config.hpp"
#include "gravwave/state.hpp"

namespace gravwave {

/// Leading-order normal variable b = sqrt(w/2k) eta + i sqrt(k/2w) psi with
/// w = sqrt(g k). Throws ConfigError for k = 0.
Complex to_normal_variable(Complex eta_hat, Complex psi_hat, double k, double g);
Complex to_normal_variable(const SurfaceState& state, Wavevector l, double g);

enum class ProbeFrame {
  /// a_k = exp(i w_k t) b_k, slow in time.
  interaction,
  /// Raw oscillating samples (b_k, or eta_k when probing elevation).
  lab,
};

/// Uniformly sampled time series of one mode.
struct ModeProbe {
  Wavevector wavevector;
  double k = 0.0;
  double omega = 0.0;
  double t0 = 0.0;
  double sample_interval = 0.0;
  ProbeFrame frame = ProbeFrame::interaction;
  std::vector<Complex> samples;

  double time(std::size_t j) const noexcept { return t0 + sample_interval * static_cast<double>(j); }
  /// Samples rotated into the interaction representation.
  std::vector<Complex> interaction() const;
  /// Samples rotated into the lab frame, where a component exp(-i nu t) has frequency nu.
  std::vector<Complex> lab() const;
};

/// Resolved list of probed modes for a grid. Explicit modes come first,
/// then ring modes in storage order; duplicates and k = 0 are dropped.
class ProbeSet {
 public:
  ProbeSet() = default;
  ProbeSet(const SpectralGrid& grid, const ProbeConfig& config, double g);

  std::size_t size() const noexcept { return modes_.size(); }
  std::span<const Wavevector> modes() const noexcept { return modes_; }
  std::span<const double> omegas() const noexcept { return omegas_; }
  std::span<const double> wavenumbers() const noexcept { return ks_; }
  ProbeVariable variable() const noexcept { return variable_; }
  ProbeFrame frame() const noexcept {
    return variable_ == ProbeVariable::normal ? ProbeFrame::interaction : ProbeFrame::lab;
  }

  /// a_k (normal) or eta_k (eta) for each probe at the state's time.
  void sample(const SurfaceState& state, std::span<Complex> out) const;

 private:
  std::vector<Wavevector> modes_;
  std::vector<std::size_t> indices_;
  std::vector<double> ks_;
  std::vector<double> omegas_;
  ProbeVariable variable_ = ProbeVariable::normal;
  double g_ = 1.0;
};

}  // namespace gravwave
