#include "gravwave/spectrum.hpp"

#include <cmath>
#include <map>

#include "gravwave/errors.hpp"
#include "gravwave/probe.hpp"

namespace gravwave {
namespace {

std::vector<double> mode_action(const SurfaceState& state, double g) {
  const SpectralGrid& grid = state.eta.grid();
  std::vector<double> out(grid.size(), 0.0);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double k = grid.k_magnitude(i);
    if (k == 0.0 || !grid.retained(i)) continue;
    out[i] = std::norm(to_normal_variable(state.eta[i], state.psi[i], k, g));
  }
  return out;
}

}  // namespace

WaveactionSpectrum waveaction_spectrum(const SpectralGrid& grid, std::span<const double> action, double bin_width) {
  if (action.size() != grid.size()) throw ConfigError("waveaction_spectrum: field size does not match grid");
  if (!(bin_width > 0.0)) throw ConfigError("waveaction_spectrum: bin width must be positive");
  struct Sums {
    double k = 0.0;
    double n = 0.0;
    std::size_t modes = 0;
  };
  std::map<long, Sums> sums;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double k = grid.k_magnitude(i);
    if (k == 0.0 || !grid.retained(i)) continue;
    auto& s = sums[std::lround(k / bin_width)];
    s.k += k;
    s.n += action[i];
    ++s.modes;
  }
  WaveactionSpectrum out;
  out.bin_width = bin_width;
  for (const auto& [bin, s] : sums) {
    SpectrumBin b;
    b.k_center = static_cast<double>(bin) * bin_width;
    b.modes = s.modes;
    b.k_mean = s.k / static_cast<double>(s.modes);
    b.n = s.n / static_cast<double>(s.modes);
    b.compensated = std::pow(b.k_mean, 4) * b.n;
    out.bins.push_back(b);
  }
  return out;
}

WaveactionSpectrum waveaction_spectrum(const SurfaceState& state, double g, double bin_width) {
  return waveaction_spectrum(state.eta.grid(), mode_action(state, g), bin_width);
}

SpectrumAccumulator::SpectrumAccumulator(GridPtr grid, double g)
    : grid_(std::move(grid)), g_(g), sum_(grid_->size(), 0.0) {}

void SpectrumAccumulator::add(const SurfaceState& state) {
  const auto action = mode_action(state, g_);
  for (std::size_t i = 0; i < sum_.size(); ++i) sum_[i] += action[i];
  ++count_;
}

std::vector<double> SpectrumAccumulator::mean_action() const {
  std::vector<double> out(sum_.size(), 0.0);
  if (count_ == 0) return out;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = sum_[i] / static_cast<double>(count_);
  return out;
}

WaveactionSpectrum SpectrumAccumulator::spectrum(double bin_width) const {
  return waveaction_spectrum(*grid_, mean_action(), bin_width);
}

PowerLawFit fit_power_law(const WaveactionSpectrum& spectrum, double k_min, double k_max) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t m = 0;
  for (const auto& b : spectrum.bins) {
    if (b.k_center < k_min || b.k_center > k_max || !(b.n > 0.0)) continue;
    const double x = std::log(b.k_mean);
    const double y = std::log(b.n);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m < 2) throw AnalysisError("fit_power_law: fewer than two nonempty bins in range");
  const double mm = static_cast<double>(m);
  const double denom = mm * sxx - sx * sx;
  PowerLawFit fit;
  fit.slope = (mm * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / mm;
  fit.points = m;
  return fit;
}

}  // namespace gravwave
