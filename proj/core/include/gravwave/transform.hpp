#pragma once

#include <memory>
#include <span>

#include "gravwave/spectral_field.hpp"

namespace gravwave {

/// Real-to-complex 2D FFT pair bound to one grid shape.
///
/// Forward divides by the point count so that f(x) = sum_k c_k exp(i k.x);
/// inverse is the unscaled synthesis. The half spectrum FFTW produces is
/// expanded to the full Hermitian array on output. Plans are built with
/// FFTW_ESTIMATE so results are bit-reproducible for a given grid.
///
/// Not thread-safe: an instance owns its work buffers.
class FourierTransform {
 public:
  explicit FourierTransform(GridPtr grid);
  ~FourierTransform();
  FourierTransform(FourierTransform&&) noexcept;
  FourierTransform& operator=(FourierTransform&&) noexcept;
  FourierTransform(const FourierTransform&) = delete;
  FourierTransform& operator=(const FourierTransform&) = delete;

  const GridPtr& grid_ptr() const noexcept;

  void forward(std::span<const double> physical, std::span<Complex> spectral);
  void inverse(std::span<const Complex> spectral, std::span<double> physical);

  SpectralField forward(const PhysicalField& f);
  PhysicalField inverse(const SpectralField& f);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Convenience wrappers using a per-thread transform cached by grid shape.
SpectralField forward_transform(const PhysicalField& f);
PhysicalField inverse_transform(const SpectralField& f);

}  // namespace gravwave
