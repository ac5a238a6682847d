#include "gravwave/spectral_field.hpp"

#include <algorithm>
#include <cmath>

#include "gravwave/errors.hpp"

namespace gravwave {
namespace {

void require_same_grid(const SpectralField& a, const SpectralField& b) {
  if (a.size() != b.size() || !(a.grid() == b.grid())) throw ConfigError("spectral fields live on different grids");
}

}  // namespace

SpectralField::SpectralField(GridPtr grid) : grid_(std::move(grid)), coeffs_(grid_->size()) {}

SpectralField::SpectralField(GridPtr grid, std::vector<Complex> coefficients)
    : grid_(std::move(grid)), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != grid_->size())
    throw ConfigError("spectral array has " + std::to_string(coeffs_.size()) + " entries, grid expects " +
                      std::to_string(grid_->size()));
}

Complex& SpectralField::at(Wavevector l) { return coeffs_[grid_->index(l)]; }
Complex SpectralField::at(Wavevector l) const { return coeffs_[grid_->index(l)]; }

SpectralField& SpectralField::operator+=(const SpectralField& o) {
  require_same_grid(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
  require_same_grid(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

SpectralField& SpectralField::operator*=(double s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

SpectralField& SpectralField::add_scaled(double s, const SpectralField& o) {
  require_same_grid(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += s * o.coeffs_[i];
  return *this;
}

void SpectralField::set_zero() noexcept { std::fill(coeffs_.begin(), coeffs_.end(), Complex{}); }

double SpectralField::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

PhysicalField::PhysicalField(GridPtr grid) : grid_(std::move(grid)), values_(grid_->size()) {}

PhysicalField::PhysicalField(GridPtr grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_->size())
    throw ConfigError("physical array has " + std::to_string(values_.size()) + " entries, grid expects " +
                      std::to_string(grid_->size()));
}

double hermitian_defect(const SpectralField& f) noexcept {
  const auto& g = f.grid();
  double d = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) d = std::max(d, std::abs(f[i] - std::conj(f[g.conjugate_index(i)])));
  return d;
}

void enforce_hermitian(SpectralField& f) noexcept {
  const auto& g = f.grid();
  for (std::size_t i = 0; i < f.size(); ++i) {
    const std::size_t j = g.conjugate_index(i);
    if (j < i) continue;
    const Complex avg = 0.5 * (f[i] + std::conj(f[j]));
    f[i] = avg;
    f[j] = std::conj(avg);
  }
}

double spectral_energy(const SpectralField& f) noexcept {
  double s = 0.0;
  for (const auto& c : f.coefficients()) s += std::norm(c);
  return s;
}

double mean_square(const PhysicalField& f) noexcept {
  double s = 0.0;
  for (double v : f.values()) s += v * v;
  return s / static_cast<double>(f.size());
}

}  // namespace gravwave
