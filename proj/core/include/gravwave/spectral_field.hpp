#pragma once

#include <complex>
#include <memory>
#include <span>
#include <vector>

#include "gravwave/grid.hpp"

namespace gravwave {

using Complex = std::complex<double>;
using GridPtr = std::shared_ptr<const SpectralGrid>;

/// Full-spectrum complex coefficients over a SpectralGrid, in the grid's
/// storage order. The physical field is f(x) = sum_k c_k exp(i k.x).
class SpectralField {
 public:
  SpectralField() = default;
  explicit SpectralField(GridPtr grid);
  SpectralField(GridPtr grid, std::vector<Complex> coefficients);

  const SpectralGrid& grid() const noexcept { return *grid_; }
  const GridPtr& grid_ptr() const noexcept { return grid_; }

  std::span<Complex> coefficients() noexcept { return coeffs_; }
  std::span<const Complex> coefficients() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  Complex& operator[](std::size_t idx) noexcept { return coeffs_[idx]; }
  const Complex& operator[](std::size_t idx) const noexcept { return coeffs_[idx]; }
  Complex& at(Wavevector l);
  Complex at(Wavevector l) const;

  SpectralField& operator+=(const SpectralField& o);
  SpectralField& operator-=(const SpectralField& o);
  SpectralField& operator*=(double s);
  /// this += s * o
  SpectralField& add_scaled(double s, const SpectralField& o);

  void set_zero() noexcept;
  double max_abs() const noexcept;

  friend bool operator==(const SpectralField& a, const SpectralField& b) noexcept {
    return a.coeffs_ == b.coeffs_ && (a.grid_ == b.grid_ || (a.grid_ && b.grid_ && *a.grid_ == *b.grid_));
  }

 private:
  GridPtr grid_;
  std::vector<Complex> coeffs_;
};

/// Real samples on the physical collocation grid x_j = (L/n) * j, stored
/// row-major with x as the slow index (matches SpectralField).
class PhysicalField {
 public:
  PhysicalField() = default;
  explicit PhysicalField(GridPtr grid);
  PhysicalField(GridPtr grid, std::vector<double> values);

  const SpectralGrid& grid() const noexcept { return *grid_; }
  const GridPtr& grid_ptr() const noexcept { return grid_; }
  std::span<double> values() noexcept { return values_; }
  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double& operator()(int ix, int iy) noexcept { return values_[static_cast<std::size_t>(ix) * grid_->ny() + iy]; }
  double operator()(int ix, int iy) const noexcept { return values_[static_cast<std::size_t>(ix) * grid_->ny() + iy]; }

 private:
  GridPtr grid_;
  std::vector<double> values_;
};

/// max |c_k - conj(c_{-k})| over the grid (Nyquist modes compare against themselves).
double hermitian_defect(const SpectralField& f) noexcept;
/// Projects onto Hermitian symmetry: c_k <- (c_k + conj(c_{-k})) / 2.
void enforce_hermitian(SpectralField& f) noexcept;

/// sum_k |c_k|^2
double spectral_energy(const SpectralField& f) noexcept;
/// (1 / N) sum_j f_j^2
double mean_square(const PhysicalField& f) noexcept;

}  // namespace gravwave
