#pragma once

#include <cstdint>

#include "gravwave/spectral_field.hpp"

namespace gravwave {

/// Surface elevation and surface velocity potential in spectral space.
struct SurfaceState {
  SpectralField eta;
  SpectralField psi;
  double time = 0.0;
  std::int64_t step = 0;

  static SurfaceState zero(const GridPtr& grid) { return {SpectralField(grid), SpectralField(grid), 0.0, 0}; }

  friend bool operator==(const SurfaceState&, const SurfaceState&) = default;
};

}  // namespace gravwave
