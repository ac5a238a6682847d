#include "gravwave/transform.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cstring>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "gravwave/errors.hpp"

namespace gravwave {
namespace {

// The FFTW planner keeps global state.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const noexcept { fftw_free(p); }
};

}  // namespace

struct FourierTransform::Impl {
  GridPtr grid;
  int nx = 0;
  int ny = 0;
  int nyh = 0;
  std::unique_ptr<double, FftwFree> real_buf;
  std::unique_ptr<fftw_complex, FftwFree> half_buf;
  fftw_plan r2c = nullptr;
  fftw_plan c2r = nullptr;

  explicit Impl(GridPtr g) : grid(std::move(g)), nx(grid->nx()), ny(grid->ny()), nyh(ny / 2 + 1) {
    real_buf.reset(static_cast<double*>(fftw_malloc(sizeof(double) * grid->size())));
    half_buf.reset(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * nx * nyh)));
    std::lock_guard lock(planner_mutex());
    r2c = fftw_plan_dft_r2c_2d(nx, ny, real_buf.get(), half_buf.get(), FFTW_ESTIMATE);
    c2r = fftw_plan_dft_c2r_2d(nx, ny, half_buf.get(), real_buf.get(), FFTW_ESTIMATE);
    if (r2c == nullptr || c2r == nullptr) throw ConfigError("FFTW could not build a plan for this grid");
  }

  ~Impl() {
    std::lock_guard lock(planner_mutex());
    if (r2c != nullptr) fftw_destroy_plan(r2c);
    if (c2r != nullptr) fftw_destroy_plan(c2r);
  }
};

FourierTransform::FourierTransform(GridPtr grid) : impl_(std::make_unique<Impl>(std::move(grid))) {}
FourierTransform::~FourierTransform() = default;
FourierTransform::FourierTransform(FourierTransform&&) noexcept = default;
FourierTransform& FourierTransform::operator=(FourierTransform&&) noexcept = default;

const GridPtr& FourierTransform::grid_ptr() const noexcept { return impl_->grid; }

void FourierTransform::forward(std::span<const double> physical, std::span<Complex> spectral) {
  auto& m = *impl_;
  const std::size_t n = m.grid->size();
  if (physical.size() != n || spectral.size() != n)
    throw ConfigError("transform input has " + std::to_string(physical.size()) + " points, grid expects " +
                      std::to_string(n));
  std::copy(physical.begin(), physical.end(), m.real_buf.get());
  fftw_execute(m.r2c);
  const double scale = 1.0 / static_cast<double>(n);
  const fftw_complex* h = m.half_buf.get();
  for (int ix = 0; ix < m.nx; ++ix) {
    const int cx = ix == 0 ? 0 : m.nx - ix;
    for (int iy = 0; iy < m.ny; ++iy) {
      Complex c;
      if (iy < m.nyh) {
        const auto& v = h[ix * m.nyh + iy];
        c = Complex(v[0], v[1]);
      } else {
        const auto& v = h[cx * m.nyh + (m.ny - iy)];
        c = Complex(v[0], -v[1]);
      }
      spectral[static_cast<std::size_t>(ix) * m.ny + iy] = c * scale;
    }
  }
}

void FourierTransform::inverse(std::span<const Complex> spectral, std::span<double> physical) {
  auto& m = *impl_;
  const std::size_t n = m.grid->size();
  if (physical.size() != n || spectral.size() != n)
    throw ConfigError("transform input has " + std::to_string(spectral.size()) + " coefficients, grid expects " +
                      std::to_string(n));
  fftw_complex* h = m.half_buf.get();
  for (int ix = 0; ix < m.nx; ++ix) {
    for (int iy = 0; iy < m.nyh; ++iy) {
      const Complex c = spectral[static_cast<std::size_t>(ix) * m.ny + iy];
      h[ix * m.nyh + iy][0] = c.real();
      h[ix * m.nyh + iy][1] = c.imag();
    }
  }
  fftw_execute(m.c2r);
  std::copy(m.real_buf.get(), m.real_buf.get() + n, physical.begin());
}

SpectralField FourierTransform::forward(const PhysicalField& f) {
  SpectralField out(impl_->grid);
  forward(f.values(), out.coefficients());
  return out;
}

PhysicalField FourierTransform::inverse(const SpectralField& f) {
  PhysicalField out(impl_->grid);
  inverse(f.coefficients(), out.values());
  return out;
}

namespace {

FourierTransform& cached_transform(const GridPtr& grid) {
  thread_local std::map<std::tuple<int, int, double, double>, std::unique_ptr<FourierTransform>> cache;
  const auto key = std::make_tuple(grid->nx(), grid->ny(), grid->box_length(), grid->dealias_fraction());
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::make_unique<FourierTransform>(grid)).first;
  return *it->second;
}

}  // namespace

SpectralField forward_transform(const PhysicalField& f) {
  SpectralField out(f.grid_ptr());
  cached_transform(f.grid_ptr()).forward(f.values(), out.coefficients());
  return out;
}

PhysicalField inverse_transform(const SpectralField& f) {
  PhysicalField out(f.grid_ptr());
  cached_transform(f.grid_ptr()).inverse(f.coefficients(), out.values());
  return out;
}

}  // namespace gravwave
