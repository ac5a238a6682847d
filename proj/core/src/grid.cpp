#include "gravwave/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gravwave/errors.hpp"

namespace gravwave {
namespace {

std::int64_t logical(int i, int n) { return i < n / 2 ? i : i - n; }

int storage(std::int64_t l, int n) {
  const auto m = l % n;
  return static_cast<int>(m < 0 ? m + n : m);
}

}  // namespace

SpectralGrid::SpectralGrid(int n_x, int n_y, double box_length, double dealias_fraction)
    : nx_(n_x), ny_(n_y), box_length_(box_length), dealias_fraction_(dealias_fraction) {
  if (n_x <= 0 || n_x % 2 != 0) throw ConfigError("grid.n_x", 0, "must be an even positive integer, got " + std::to_string(n_x));
  if (n_y <= 0 || n_y % 2 != 0) throw ConfigError("grid.n_y", 0, "must be an even positive integer, got " + std::to_string(n_y));
  if (!(box_length > 0.0) || !std::isfinite(box_length)) throw ConfigError("grid.box_length", 0, "must be positive");
  if (!(dealias_fraction > 0.0 && dealias_fraction <= 1.0))
    throw ConfigError("grid.dealias_fraction", 0, "must lie in (0, 1]");

  unit_k_ = 2.0 * std::numbers::pi / box_length_;
  const std::size_t n = size();
  labels_.resize(n);
  conj_.resize(n);
  kmag_.resize(n);
  mask_.resize(n);
  const double cut_x = dealias_fraction_ * nx_ / 2.0;
  const double cut_y = dealias_fraction_ * ny_ / 2.0;
  for (int ix = 0; ix < nx_; ++ix) {
    for (int iy = 0; iy < ny_; ++iy) {
      const std::size_t idx = static_cast<std::size_t>(ix) * ny_ + iy;
      const Wavevector l{logical(ix, nx_), logical(iy, ny_)};
      labels_[idx] = l;
      conj_[idx] = static_cast<std::size_t>(storage(-l.x, nx_)) * ny_ + storage(-l.y, ny_);
      kmag_[idx] = unit_k_ * std::sqrt(static_cast<double>(l.norm2()));
      const bool nyquist = (l.x == -nx_ / 2) || (l.y == -ny_ / 2);
      mask_[idx] = (!nyquist && std::abs(static_cast<double>(l.x)) < cut_x && std::abs(static_cast<double>(l.y)) < cut_y) ? 1 : 0;
    }
  }
}

bool SpectralGrid::contains(Wavevector l) const noexcept {
  return l.x >= -nx_ / 2 && l.x < nx_ / 2 && l.y >= -ny_ / 2 && l.y < ny_ / 2;
}

std::size_t SpectralGrid::index(Wavevector l) const {
  if (!contains(l))
    throw ConfigError("wavevector (" + std::to_string(l.x) + "," + std::to_string(l.y) + ") outside the grid");
  return static_cast<std::size_t>(storage(l.x, nx_)) * ny_ + storage(l.y, ny_);
}

double SpectralGrid::k_magnitude(Wavevector l) const {
  return unit_k_ * std::sqrt(static_cast<double>(l.norm2()));
}

bool SpectralGrid::is_nyquist(std::size_t idx) const noexcept {
  return labels_[idx].x == -nx_ / 2 || labels_[idx].y == -ny_ / 2;
}

double SpectralGrid::axis_k_max() const noexcept { return unit_k_ * (nx_ > ny_ ? nx_ : ny_) / 2.0; }

}  // namespace gravwave
