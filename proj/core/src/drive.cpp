#include "gravwave/drive.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "gravwave/operators.hpp"

namespace gravwave {
namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Canonical representative of each {k, -k} pair: upper half plane plus the
// positive x half-axis. Self-conjugate modes (k = 0, Nyquist) are not canonical.
bool canonical(const SpectralGrid& g, std::size_t idx) {
  return g.conjugate_index(idx) != idx && idx < g.conjugate_index(idx);
}

constexpr std::uint64_t kInitialStream = 0x1ull;
constexpr std::uint64_t kForcingStream = 0x2ull;

}  // namespace

double hashed_phase(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) noexcept {
  const std::uint64_t h = splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ counter);
  return static_cast<double>(h >> 11) * 0x1.0p-53 * 2.0 * std::numbers::pi;
}

double drive_exponent(double k, double x, const DriveConfig& drive) {
  if (k < drive.k_low) {
    const double r = (drive.k_low - k) / drive.k_high;
    return x * std::pow(1.0 + r * r, 0.75);
  }
  if (k <= drive.k_high) return x;
  return x * std::pow(k / drive.k_high, 0.75);
}

double prescribed_modulus(double k, double x, const DriveConfig& drive) {
  if (k <= 0.0) return 0.0;
  return drive.amplitude_prefactor * std::pow(k, drive_exponent(k, x, drive));
}

SurfaceState initial_state(const GridPtr& grid, const DriveConfig& drive, std::uint64_t seed) {
  SurfaceState s = SurfaceState::zero(grid);
  const SpectralGrid& g = *grid;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!canonical(g, i)) continue;
    const double k = g.k_magnitude(i);
    const double theta = hashed_phase(seed, kInitialStream, i);
    const Complex phase = std::polar(1.0, theta);
    s.eta[i] = prescribed_modulus(k, drive.eta_exponent, drive) * phase;
    s.psi[i] = prescribed_modulus(k, drive.psi_exponent, drive) * phase;
    const std::size_t j = g.conjugate_index(i);
    s.eta[j] = std::conj(s.eta[i]);
    s.psi[j] = std::conj(s.psi[i]);
  }
  dealias_in_place(s.eta);
  dealias_in_place(s.psi);
  return s;
}

void apply_forcing(SurfaceState& state, const DriveConfig& drive, std::uint64_t seed) {
  const SpectralGrid& g = state.eta.grid();
  const std::uint64_t step_key = splitmix64(static_cast<std::uint64_t>(state.step));
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!canonical(g, i) || !g.retained(i)) continue;
    const double k = g.k_magnitude(i);
    if (!(k > drive.k_low && k < drive.k_high)) continue;
    const std::size_t j = g.conjugate_index(i);
    const double target_eta = prescribed_modulus(k, drive.eta_exponent, drive);
    const double target_psi = prescribed_modulus(k, drive.psi_exponent, drive);

    const double theta = hashed_phase(seed, kForcingStream, step_key ^ i);
    auto reset = [&](Complex& c, double target) {
      const double m = std::abs(c);
      if (drive.forcing_mode == ForcingMode::clamp_modulus && m > 0.0) {
        // already on target to rounding: leave untouched so clamping is idempotent
        if (std::abs(m - target) <= 4.0 * std::numeric_limits<double>::epsilon() * target) return;
        c *= target / m;
      } else {
        c = std::polar(target, theta);
      }
    };
    reset(state.eta[i], target_eta);
    reset(state.psi[i], target_psi);
    state.eta[j] = std::conj(state.eta[i]);
    state.psi[j] = std::conj(state.psi[i]);
  }
}

double damping_rate(double k, const DriveConfig& drive) {
  const auto& d = drive.damping;
  if (k < d.low_threshold) return d.low_coeff * std::pow(d.low_threshold - k, d.low_exponent);
  if (k <= d.high_threshold) return 0.0;
  return d.high_coeff * std::pow(k - d.high_threshold, d.high_exponent);
}

void apply_damping(SurfaceState& state, const DriveConfig& drive, double dt) {
  const SpectralGrid& g = state.eta.grid();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double rate = damping_rate(g.k_magnitude(i), drive);
    if (rate == 0.0) continue;
    const double f = std::exp(-rate * dt);
    state.eta[i] *= f;
    state.psi[i] *= f;
  }
}

}  // namespace gravwave
