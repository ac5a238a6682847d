#include "gravwave/probe.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "gravwave/errors.hpp"

namespace gravwave {

Complex to_normal_variable(Complex eta_hat, Complex psi_hat, double k, double g) {
  if (!(k > 0.0)) throw ConfigError("normal variable is undefined at k = 0");
  const double w = std::sqrt(g * k);
  return std::sqrt(w / (2.0 * k)) * eta_hat + Complex(0.0, std::sqrt(k / (2.0 * w))) * psi_hat;
}

Complex to_normal_variable(const SurfaceState& state, Wavevector l, double g) {
  const auto& grid = state.eta.grid();
  const std::size_t i = grid.index(l);
  return to_normal_variable(state.eta[i], state.psi[i], grid.k_magnitude(i), g);
}

std::vector<Complex> ModeProbe::interaction() const {
  if (frame == ProbeFrame::interaction) return samples;
  std::vector<Complex> out(samples.size());
  for (std::size_t j = 0; j < samples.size(); ++j) out[j] = std::polar(1.0, omega * time(j)) * samples[j];
  return out;
}

std::vector<Complex> ModeProbe::lab() const {
  if (frame == ProbeFrame::lab) return samples;
  std::vector<Complex> out(samples.size());
  for (std::size_t j = 0; j < samples.size(); ++j) out[j] = std::polar(1.0, -omega * time(j)) * samples[j];
  return out;
}

ProbeSet::ProbeSet(const SpectralGrid& grid, const ProbeConfig& config, double g) : variable_(config.variable), g_(g) {
  std::set<std::size_t> seen;
  auto add = [&](std::size_t idx) {
    if (idx == 0 || !seen.insert(idx).second) return;
    modes_.push_back(grid.wavevector(idx));
    indices_.push_back(idx);
    ks_.push_back(grid.k_magnitude(idx));
    omegas_.push_back(std::sqrt(g * grid.k_magnitude(idx)));
  };
  for (const auto& m : config.modes) {
    if (!grid.contains(m))
      throw ConfigError("probes.modes", 0, "mode (" + std::to_string(m.x) + "," + std::to_string(m.y) + ") is outside the grid");
    add(grid.index(m));
  }
  for (const auto& ring : config.rings)
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (grid.retained(i) && ring.contains(grid.k_magnitude(i))) add(i);
}

void ProbeSet::sample(const SurfaceState& state, std::span<Complex> out) const {
  for (std::size_t p = 0; p < indices_.size(); ++p) {
    const std::size_t i = indices_[p];
    if (variable_ == ProbeVariable::eta) {
      out[p] = state.eta[i];
    } else {
      const Complex b = to_normal_variable(state.eta[i], state.psi[i], ks_[p], g_);
      out[p] = std::polar(1.0, omegas_[p] * state.time) * b;
    }
  }
}

}  // namespace gravwave
