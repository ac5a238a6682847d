#include "gravwave/rk78.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gravwave/errors.hpp"

namespace gravwave {

// clang-format off
const std::array<Rational, 13> Fehlberg78::c = {{
    {0, 1}, {2, 27}, {1, 9}, {1, 6}, {5, 12}, {1, 2}, {5, 6}, {1, 6}, {2, 3}, {1, 3}, {1, 1}, {0, 1}, {1, 1}}};

const std::array<std::array<Rational, 13>, 13> Fehlberg78::a = {{
    {},
    {{{2, 27}}},
    {{{1, 36}, {1, 12}}},
    {{{1, 24}, {0, 1}, {1, 8}}},
    {{{5, 12}, {0, 1}, {-25, 16}, {25, 16}}},
    {{{1, 20}, {0, 1}, {0, 1}, {1, 4}, {1, 5}}},
    {{{-25, 108}, {0, 1}, {0, 1}, {125, 108}, {-65, 27}, {125, 54}}},
    {{{31, 300}, {0, 1}, {0, 1}, {0, 1}, {61, 225}, {-2, 9}, {13, 900}}},
    {{{2, 1}, {0, 1}, {0, 1}, {-53, 6}, {704, 45}, {-107, 9}, {67, 90}, {3, 1}}},
    {{{-91, 108}, {0, 1}, {0, 1}, {23, 108}, {-976, 135}, {311, 54}, {-19, 60}, {17, 6}, {-1, 12}}},
    {{{2383, 4100}, {0, 1}, {0, 1}, {-341, 164}, {4496, 1025}, {-301, 82}, {2133, 4100}, {45, 82}, {45, 164}, {18, 41}}},
    {{{3, 205}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {-6, 41}, {-3, 205}, {-3, 41}, {3, 41}, {6, 41}, {0, 1}}},
    {{{-1777, 4100}, {0, 1}, {0, 1}, {-341, 164}, {4496, 1025}, {-289, 82}, {2193, 4100}, {51, 82}, {33, 164}, {12, 41}, {0, 1}, {1, 1}}},
}};

const std::array<Rational, 13> Fehlberg78::b_high = {{
    {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {34, 105}, {9, 35}, {9, 35}, {9, 280}, {9, 280}, {0, 1}, {41, 840}, {41, 840}}};

const std::array<Rational, 13> Fehlberg78::b_low = {{
    {41, 840}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {34, 105}, {9, 35}, {9, 35}, {9, 280}, {9, 280}, {41, 840}, {0, 1}, {0, 1}}};
// clang-format on

Rk78Stepper::Rk78Stepper(GridPtr grid)
    : rhs_(grid), stage_eta_(grid), stage_psi_(grid) {
  for (auto& k : k_) k = Tendency{SpectralField(grid), SpectralField(grid)};
  for (int i = 0; i < Fehlberg78::stages; ++i) {
    c_[i] = Fehlberg78::c[i].value();
    b_[i] = Fehlberg78::b_high[i].value();
    e_[i] = (Rational{Fehlberg78::b_high[i].num * Fehlberg78::b_low[i].den - Fehlberg78::b_low[i].num * Fehlberg78::b_high[i].den,
                      Fehlberg78::b_high[i].den * Fehlberg78::b_low[i].den})
                .value();
    for (int j = 0; j < i; ++j) a_[i][j] = Fehlberg78::a[i][j].value();
  }
}

double Rk78Stepper::advance(SurfaceState& state, PhysicsParams params, double dt) {
  const std::size_t n = state.eta.size();
  constexpr int s = Fehlberg78::stages;

  rhs_.evaluate(state.eta, state.psi, params, state.time, k_[0]);
  for (int i = 1; i < s; ++i) {
    for (std::size_t m = 0; m < n; ++m) {
      Complex de{};
      Complex dp{};
      for (int j = 0; j < i; ++j) {
        const double aij = a_[i][j];
        if (aij == 0.0) continue;
        de += aij * k_[j].eta[m];
        dp += aij * k_[j].psi[m];
      }
      stage_eta_[m] = state.eta[m] + dt * de;
      stage_psi_[m] = state.psi[m] + dt * dp;
    }
    rhs_.evaluate(stage_eta_, stage_psi_, params, state.time + c_[i] * dt, k_[i]);
  }

  double err = 0.0;
  double scale = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    Complex de{};
    Complex dp{};
    Complex ee{};
    Complex ep{};
    for (int j = 0; j < s; ++j) {
      if (b_[j] != 0.0) {
        de += b_[j] * k_[j].eta[m];
        dp += b_[j] * k_[j].psi[m];
      }
      if (e_[j] != 0.0) {
        ee += e_[j] * k_[j].eta[m];
        ep += e_[j] * k_[j].psi[m];
      }
    }
    state.eta[m] += dt * de;
    state.psi[m] += dt * dp;
    err = std::max({err, std::abs(dt * ee), std::abs(dt * ep)});
    scale = std::max({scale, std::abs(state.eta[m]), std::abs(state.psi[m])});
  }
  state.eta[0] = Complex{};
  state.time += dt;
  state.step += 1;
  return scale > 0.0 ? err / scale : err;
}

SurfaceState step(const SurfaceState& state, const SimConfig& config) {
  Rk78Stepper stepper(state.eta.grid_ptr());
  SurfaceState next = state;
  const double estimate = stepper.advance(next, PhysicsParams{config.g, config.epsilon}, config.time_step());
  if (estimate > config.error_abort_threshold) throw IntegrationError(estimate, config.error_abort_threshold, next.time);
  return next;
}

}  // namespace gravwave
