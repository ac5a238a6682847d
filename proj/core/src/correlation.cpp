#include "gravwave/correlation.hpp"

#include <algorithm>
#include <cmath>

#include "gravwave/phase.hpp"

namespace gravwave {

std::optional<double> correlation(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.empty()) return std::nullopt;
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double cxy = 0.0, cxx = 0.0, cyy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    cxy += dx * dy;
    cxx += dx * dx;
    cyy += dy * dy;
  }
  if (!(cxx > 0.0) || !(cyy > 0.0)) return std::nullopt;
  return std::clamp(cxy / std::sqrt(cxx * cyy), -1.0, 1.0);
}

std::optional<double> correlation(std::span<const Complex> x, std::span<const Complex> y) {
  if (x.size() != y.size() || x.empty()) return std::nullopt;
  const double n = static_cast<double>(x.size());
  Complex mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double cxy = 0.0, cxx = 0.0, cyy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Complex dx = x[i] - mx;
    const Complex dy = y[i] - my;
    cxy += dx.real() * dy.real() + dx.imag() * dy.imag();
    cxx += std::norm(dx);
    cyy += std::norm(dy);
  }
  if (!(cxx > 0.0) || !(cyy > 0.0)) return std::nullopt;
  return std::clamp(cxy / std::sqrt(cxx * cyy), -1.0, 1.0);
}

ModeVariables mode_variables(std::span<const Complex> samples) {
  ModeVariables out;
  out.amplitude.reserve(samples.size());
  out.phase_factor.reserve(samples.size());
  for (Complex a : samples) {
    const double r = std::abs(a);
    out.amplitude.push_back(r);
    out.phase_factor.push_back(r > 0.0 ? a / r : Complex(1.0, 0.0));
  }
  out.phase = unwrap_phase(samples).phi;
  return out;
}

}  // namespace gravwave
