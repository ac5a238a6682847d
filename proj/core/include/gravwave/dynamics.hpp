#pragma once

#include <vector>

#include "gravwave/config.hpp"
#include "gravwave/state.hpp"
#include "gravwave/transform.hpp"

namespace gravwave {

struct PhysicsParams {
  double g = 1.0;
  double epsilon = 0.0;
};

struct Tendency {
  SpectralField eta;
  SpectralField psi;
};

/// Right-hand side of the cubic-truncated free-surface equations
///
///   eta_t = G[psi] - eps (G[G[psi] eta] + div((grad psi) eta))
///           + eps^2 (G[G[G[psi] eta] eta] + 1/2 G[(lap psi) eta^2] + 1/2 lap(G[psi] eta^2))
///   psi_t = -g eta - eps/2 (|grad psi|^2 - G[psi]^2)
///           - eps^2 G[psi] (G[G[psi] eta] + (lap psi) eta)
///
/// where G is multiplication by |k|. Multipliers act in spectral space,
/// products in physical space, and each assembled tendency is dealiased
/// once. Twelve real FFTs per evaluation when eps != 0, none otherwise.
class RhsEvaluator {
 public:
  explicit RhsEvaluator(GridPtr grid);

  /// Throws BlowUpError on the first non-finite tendency coefficient.
  void evaluate(const SpectralField& eta, const SpectralField& psi, PhysicsParams params, double time, Tendency& out);
  Tendency operator()(const SurfaceState& state, PhysicsParams params);

  const GridPtr& grid_ptr() const noexcept { return grid_; }

 private:
  GridPtr grid_;
  FourierTransform fft_;
  std::vector<Complex> gpsi_, psix_, psiy_, lpsi_, sa_, sb_;
  std::vector<double> eta_r_, gpsi_r_, psix_r_, psiy_r_, lpsi_r_, gp1_r_, work_r_;
};

Tendency rhs(const SurfaceState& state, const SimConfig& config);

/// sqrt(g |k|)
double linear_frequency(double k_magnitude, double g);
double linear_frequency(Wavevector l, const SpectralGrid& grid, double g);

/// 1/2 sum_k (g |eta_k|^2 + |k| |psi_k|^2), conserved by the eps = 0 dynamics.
double linear_energy(const SurfaceState& state, double g);

}  // namespace gravwave
