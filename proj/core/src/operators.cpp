#include "gravwave/operators.hpp"

namespace gravwave {

SpectralField gilbert(const SpectralField& f) {
  SpectralField out(f.grid_ptr());
  const auto& g = f.grid();
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g.k_magnitude(i) * f[i];
  return out;
}

Gradient gradient(const SpectralField& f) {
  Gradient out{SpectralField(f.grid_ptr()), SpectralField(f.grid_ptr())};
  const auto& g = f.grid();
  const Complex i_unit(0.0, 1.0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (g.is_nyquist(i)) continue;
    out.x[i] = i_unit * g.kx(i) * f[i];
    out.y[i] = i_unit * g.ky(i) * f[i];
  }
  return out;
}

SpectralField divergence(const SpectralField& fx, const SpectralField& fy) {
  SpectralField out(fx.grid_ptr());
  const auto& g = fx.grid();
  const Complex i_unit(0.0, 1.0);
  for (std::size_t i = 0; i < fx.size(); ++i) {
    if (g.is_nyquist(i)) continue;
    out[i] = i_unit * (g.kx(i) * fx[i] + g.ky(i) * fy[i]);
  }
  return out;
}

SpectralField laplacian(const SpectralField& f) {
  SpectralField out(f.grid_ptr());
  const auto& g = f.grid();
  for (std::size_t i = 0; i < f.size(); ++i) {
    // Same association as gilbert(gilbert(f)), so the two agree bitwise.
    const double k = g.k_magnitude(i);
    out[i] = -(k * (k * f[i]));
  }
  return out;
}

SpectralField dealias(const SpectralField& f) {
  SpectralField out = f;
  dealias_in_place(out);
  return out;
}

void dealias_in_place(SpectralField& f) noexcept {
  const auto& g = f.grid();
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!g.retained(i)) f[i] = Complex{};
}

}  // namespace gravwave
