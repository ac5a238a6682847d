#include "gravwave/dynamics.hpp"

#include <cmath>

#include "gravwave/errors.hpp"
#include "gravwave/operators.hpp"

namespace gravwave {

RhsEvaluator::RhsEvaluator(GridPtr grid)
    : grid_(std::move(grid)),
      fft_(grid_),
      gpsi_(grid_->size()),
      psix_(grid_->size()),
      psiy_(grid_->size()),
      lpsi_(grid_->size()),
      sa_(grid_->size()),
      sb_(grid_->size()),
      eta_r_(grid_->size()),
      gpsi_r_(grid_->size()),
      psix_r_(grid_->size()),
      psiy_r_(grid_->size()),
      lpsi_r_(grid_->size()),
      gp1_r_(grid_->size()),
      work_r_(grid_->size()) {}

void RhsEvaluator::evaluate(const SpectralField& eta, const SpectralField& psi, PhysicsParams params, double time,
                            Tendency& out) {
  const SpectralGrid& g = *grid_;
  const std::size_t n = g.size();
  if (eta.size() != n || psi.size() != n) throw ConfigError("state does not match the evaluator grid");
  if (out.eta.size() != n) out.eta = SpectralField(grid_);
  if (out.psi.size() != n) out.psi = SpectralField(grid_);

  const Complex iu(0.0, 1.0);
  const double eps = params.epsilon;
  for (std::size_t i = 0; i < n; ++i) {
    const double k = g.k_magnitude(i);
    gpsi_[i] = k * psi[i];
    lpsi_[i] = -(k * (k * psi[i]));
    if (g.is_nyquist(i)) {
      psix_[i] = psiy_[i] = Complex{};
    } else {
      psix_[i] = iu * g.kx(i) * psi[i];
      psiy_[i] = iu * g.ky(i) * psi[i];
    }
    out.eta[i] = gpsi_[i];
    out.psi[i] = -params.g * eta[i];
  }

  if (eps != 0.0) {
    fft_.inverse(eta.coefficients(), eta_r_);
    fft_.inverse(gpsi_, gpsi_r_);
    fft_.inverse(psix_, psix_r_);
    fft_.inverse(psiy_, psiy_r_);
    fft_.inverse(lpsi_, lpsi_r_);

    // G[G[psi] eta], kept in spectral (sa_) and physical (gp1_r_) form.
    for (std::size_t j = 0; j < n; ++j) work_r_[j] = gpsi_r_[j] * eta_r_[j];
    fft_.forward(work_r_, sa_);
    for (std::size_t i = 0; i < n; ++i) {
      sa_[i] *= g.k_magnitude(i);
      out.eta[i] -= eps * sa_[i];
    }
    fft_.inverse(sa_, gp1_r_);

    // div((grad psi) eta)
    for (std::size_t j = 0; j < n; ++j) work_r_[j] = psix_r_[j] * eta_r_[j];
    fft_.forward(work_r_, sa_);
    for (std::size_t j = 0; j < n; ++j) work_r_[j] = psiy_r_[j] * eta_r_[j];
    fft_.forward(work_r_, sb_);
    for (std::size_t i = 0; i < n; ++i) {
      if (g.is_nyquist(i)) continue;
      out.eta[i] -= eps * (iu * (g.kx(i) * sa_[i] + g.ky(i) * sb_[i]));
    }

    // G[G[G[psi] eta] eta + 1/2 (lap psi) eta^2] + 1/2 lap(G[psi] eta^2)
    const double eps2 = eps * eps;
    for (std::size_t j = 0; j < n; ++j) {
      const double e = eta_r_[j];
      work_r_[j] = gp1_r_[j] * e + 0.5 * lpsi_r_[j] * e * e;
    }
    fft_.forward(work_r_, sa_);
    for (std::size_t j = 0; j < n; ++j) work_r_[j] = gpsi_r_[j] * eta_r_[j] * eta_r_[j];
    fft_.forward(work_r_, sb_);
    for (std::size_t i = 0; i < n; ++i) {
      const double k = g.k_magnitude(i);
      out.eta[i] += eps2 * (k * sa_[i] - 0.5 * (k * (k * sb_[i])));
    }

    for (std::size_t j = 0; j < n; ++j) {
      const double gp = gpsi_r_[j];
      const double grad2 = psix_r_[j] * psix_r_[j] + psiy_r_[j] * psiy_r_[j];
      work_r_[j] = -0.5 * eps * (grad2 - gp * gp) - eps2 * gp * (gp1_r_[j] + lpsi_r_[j] * eta_r_[j]);
    }
    fft_.forward(work_r_, sa_);
    for (std::size_t i = 0; i < n; ++i) out.psi[i] += sa_[i];
  }

  dealias_in_place(out.eta);
  dealias_in_place(out.psi);

  for (std::size_t i = 0; i < n; ++i) {
    const Complex a = out.eta[i];
    const Complex b = out.psi[i];
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) || !std::isfinite(b.real()) || !std::isfinite(b.imag()))
      throw BlowUpError(g.wavevector(i), time);
  }
}

Tendency RhsEvaluator::operator()(const SurfaceState& state, PhysicsParams params) {
  Tendency out{SpectralField(grid_), SpectralField(grid_)};
  evaluate(state.eta, state.psi, params, state.time, out);
  return out;
}

Tendency rhs(const SurfaceState& state, const SimConfig& config) {
  RhsEvaluator evaluator(state.eta.grid_ptr());
  return evaluator(state, PhysicsParams{config.g, config.epsilon});
}

double linear_frequency(double k_magnitude, double g) { return std::sqrt(g * k_magnitude); }

double linear_frequency(Wavevector l, const SpectralGrid& grid, double g) {
  return linear_frequency(grid.k_magnitude(l), g);
}

double linear_energy(const SurfaceState& state, double g) {
  const auto& grid = state.eta.grid();
  double e = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i)
    e += g * std::norm(state.eta[i]) + grid.k_magnitude(i) * std::norm(state.psi[i]);
  return 0.5 * e;
}

}  // namespace gravwave
