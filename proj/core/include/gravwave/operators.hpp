#pragma once

#include "gravwave/spectral_field.hpp"

namespace gravwave {

// Fourier multipliers. All of them send the k = 0 coefficient to zero.

/// Multiplication by |k| (the Gilbert transform of the surface equations).
SpectralField gilbert(const SpectralField& f);

struct Gradient {
  SpectralField x;
  SpectralField y;
};

/// Multipliers i*k_x and i*k_y. Nyquist rows/columns map to zero so the
/// result stays Hermitian.
Gradient gradient(const SpectralField& f);

/// i*k_x*fx + i*k_y*fy
SpectralField divergence(const SpectralField& fx, const SpectralField& fy);

/// Multiplier -|k|^2.
SpectralField laplacian(const SpectralField& f);

/// Zeroes every coefficient outside the grid's retained set.
SpectralField dealias(const SpectralField& f);
void dealias_in_place(SpectralField& f) noexcept;

}  // namespace gravwave
