#pragma once

#include <cstdint>

#include "gravwave/config.hpp"
#include "gravwave/state.hpp"

namespace gravwave {

/// Piecewise exponent alpha_k for the initial/forced moduli, scaled by x
/// (x = eta_exponent or psi_exponent):
///   x [1 + ((k_low - k)/k_high)^2]^{3/4}   for 0 < k < k_low
///   x                                      for k_low <= k <= k_high
///   x (k/k_high)^{3/4}                     for k > k_high
double drive_exponent(double k, double x, const DriveConfig& drive);

/// Prescribed modulus prefactor * k^{alpha_k}; zero at k = 0.
double prescribed_modulus(double k, double x, const DriveConfig& drive);

/// Random-phase initial condition: every mode gets its prescribed modulus
/// and a phase uniform in [0, 2*pi) shared by eta and psi; Hermitian
/// symmetry is imposed afterwards and the dealias mask applied.
SurfaceState initial_state(const GridPtr& grid, const DriveConfig& drive, std::uint64_t seed);

/// Resets the moduli of eta and psi inside the open ring k_low < |k| < k_high
/// to their prescribed values. Clamp mode keeps the evolved phase (a zero
/// coefficient gets a fresh phase); rerandomize mode draws a new phase.
/// Phases are a pure function of (seed, step, mode), so runs resume bit-exactly.
void apply_forcing(SurfaceState& state, const DriveConfig& drive, std::uint64_t seed);

/// Damping rate gamma_k. The low-k branch uses (threshold - k) so it is
/// real and positive below the threshold.
double damping_rate(double k, const DriveConfig& drive);

/// Multiplies every coefficient of eta and psi by exp(-gamma_k dt).
void apply_damping(SurfaceState& state, const DriveConfig& drive, double dt);

/// Uniform phase in [0, 2*pi) derived from a counter-based hash.
double hashed_phase(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) noexcept;

}  // namespace gravwave
