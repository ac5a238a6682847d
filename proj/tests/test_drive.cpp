#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "gravwave/drive.hpp"
#include "gravwave/dynamics.hpp"
#include "gravwave/simulation.hpp"

using namespace gravwave;

namespace {

constexpr double pi = std::numbers::pi;

GridPtr make_grid(int n = 64) { return std::make_shared<const SpectralGrid>(n, n, 2.0 * pi, 0.5); }

bool in_ring(double k, const DriveConfig& d) { return k > d.k_low && k < d.k_high; }

}  // namespace

TEST(DriveExponent, BranchesAndContinuity) {
  const DriveConfig d;
  const double x = -7.0 / 4.0;
  EXPECT_EQ(drive_exponent(7.0, x, d), x);
  EXPECT_EQ(drive_exponent(6.0, x, d), x);
  EXPECT_EQ(drive_exponent(9.0, x, d), x);
  EXPECT_DOUBLE_EQ(drive_exponent(3.0, x, d), x * std::pow(1.0 + std::pow(3.0 / 9.0, 2), 0.75));
  EXPECT_DOUBLE_EQ(drive_exponent(18.0, x, d), x * std::pow(2.0, 0.75));
  EXPECT_NEAR(drive_exponent(6.0 - 1e-9, x, d), x, 1e-8);
  EXPECT_NEAR(drive_exponent(9.0 + 1e-9, x, d), x, 1e-8);
}

TEST(PrescribedModulus, Examples) {
  const DriveConfig d;
  // 2 pi^3 * 7^(-7/4)
  EXPECT_NEAR(prescribed_modulus(7.0, d.eta_exponent, d), 2.0585340, 1e-6);
  EXPECT_NEAR(prescribed_modulus(9.0, d.psi_exponent, d), 0.44201190587503986, 1e-14);
  EXPECT_EQ(prescribed_modulus(0.0, d.eta_exponent, d), 0.0);
}

TEST(InitialState, ModuliPhasesAndSymmetry) {
  const auto grid = make_grid();
  const DriveConfig d;
  const auto s = initial_state(grid, d, 42);
  EXPECT_EQ(hermitian_defect(s.eta), 0.0);
  EXPECT_EQ(hermitian_defect(s.psi), 0.0);
  EXPECT_EQ(s.eta.at({0, 0}), Complex{});
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const double k = grid->k_magnitude(i);
    if (!grid->retained(i) || k == 0.0) {
      EXPECT_EQ(s.eta[i], Complex{});
      continue;
    }
    EXPECT_NEAR(std::abs(s.eta[i]) / prescribed_modulus(k, d.eta_exponent, d), 1.0, 1e-14);
    EXPECT_NEAR(std::abs(s.psi[i]) / prescribed_modulus(k, d.psi_exponent, d), 1.0, 1e-14);
    EXPECT_NEAR(std::remainder(std::arg(s.eta[i]) - std::arg(s.psi[i]), 2.0 * pi), 0.0, 1e-14);
  }
  const auto& at7 = s.eta.at({7, 0});
  EXPECT_NEAR(std::abs(at7), 2.0585340, 1e-6);
}

TEST(InitialState, PhasesLookUniform) {
  const auto grid = make_grid(128);
  const auto s = initial_state(grid, DriveConfig{}, 3);
  std::array<int, 8> bins{};
  int n = 0;
  for (std::size_t i = 0; i < grid->size(); ++i) {
    if (s.eta[i] == Complex{}) continue;
    const double t = std::arg(s.eta[i]) + pi;
    ++bins[std::min(7, static_cast<int>(t / (2.0 * pi) * 8.0))];
    ++n;
  }
  for (int b : bins) EXPECT_NEAR(static_cast<double>(b) / n, 0.125, 0.01);
}

TEST(InitialState, DeterministicInSeed) {
  const auto grid = make_grid();
  EXPECT_EQ(initial_state(grid, DriveConfig{}, 7), initial_state(grid, DriveConfig{}, 7));
  EXPECT_NE(initial_state(grid, DriveConfig{}, 7), initial_state(grid, DriveConfig{}, 8));
}

TEST(Forcing, ClampRestoresModulusKeepsPhase) {
  const auto grid = make_grid();
  const DriveConfig d;
  auto s = initial_state(grid, d, 1);
  const Complex before7 = s.eta.at({7, 0});
  const Complex before12 = s.eta.at({12, 0});
  s.eta.at({7, 0}) *= 0.5;
  s.eta.at({-7, 0}) *= 0.5;
  s.eta.at({12, 0}) *= 0.5;
  s.eta.at({-12, 0}) *= 0.5;
  apply_forcing(s, d, 1);
  EXPECT_NEAR(std::abs(s.eta.at({7, 0}) - before7), 0.0, 1e-15);
  EXPECT_EQ(s.eta.at({12, 0}), 0.5 * before12);
  EXPECT_EQ(hermitian_defect(s.eta), 0.0);
  EXPECT_EQ(hermitian_defect(s.psi), 0.0);
}

TEST(Forcing, ClampIsIdempotent) {
  const auto grid = make_grid();
  const DriveConfig d;
  auto s = initial_state(grid, d, 5);
  for (std::size_t i = 0; i < grid->size(); ++i) {
    s.eta[i] *= 0.7 + 0.01 * static_cast<double>(i % 13);
    s.psi[i] *= 1.3;
  }
  enforce_hermitian(s.eta);
  enforce_hermitian(s.psi);
  apply_forcing(s, d, 5);
  const auto once = s;
  apply_forcing(s, d, 5);
  EXPECT_EQ(s, once);
}

TEST(Forcing, ZeroCoefficientGetsAPhase) {
  const auto grid = make_grid();
  const DriveConfig d;
  auto s = SurfaceState::zero(grid);
  apply_forcing(s, d, 2);
  EXPECT_NEAR(std::abs(s.eta.at({0, 7})), prescribed_modulus(7.0, d.eta_exponent, d), 1e-15);
  EXPECT_EQ(s.eta.at({0, 5}), Complex{});
}

TEST(Forcing, RerandomizeIsDeterministicPerStep) {
  const auto grid = make_grid();
  DriveConfig d;
  d.forcing_mode = ForcingMode::rerandomize_phase;
  auto a = initial_state(grid, d, 9);
  auto b = a;
  apply_forcing(a, d, 9);
  apply_forcing(b, d, 9);
  EXPECT_EQ(a, b);
  auto c = initial_state(grid, d, 9);
  c.step = 1;
  apply_forcing(c, d, 9);
  EXPECT_NE(c.eta.at({7, 1}), a.eta.at({7, 1}));
  EXPECT_NEAR(std::abs(c.eta.at({7, 1})), std::abs(a.eta.at({7, 1})), 1e-15);
  EXPECT_EQ(hermitian_defect(c.eta), 0.0);
}

TEST(Damping, RateExamples) {
  const DriveConfig d;
  EXPECT_EQ(damping_rate(30.0, d), 0.0);
  EXPECT_EQ(damping_rate(6.0, d), 0.0);
  EXPECT_EQ(damping_rate(64.0, d), 0.0);
  EXPECT_NEAR(damping_rate(65.0, d), 0.028, 1e-15);
  EXPECT_NEAR(damping_rate(66.0, d), 0.112, 1e-15);
  EXPECT_NEAR(damping_rate(2.0, d), 5.0 * 8.0, 1e-12);
  EXPECT_GT(damping_rate(5.9, d), 0.0);
}

TEST(Damping, ScalesByExponential) {
  const auto grid = std::make_shared<const SpectralGrid>(256, 256, 2.0 * pi, 0.5);
  DriveConfig d;
  auto s = SurfaceState::zero(grid);
  // |k| = 65 exactly: (63, 16)
  s.eta.at({63, 16}) = 1.0;
  s.eta.at({20, 0}) = 1.0;
  apply_damping(s, d, 0.1);
  EXPECT_NEAR(s.eta.at({63, 16}).real(), std::exp(-0.0028), 1e-15);
  EXPECT_EQ(s.eta.at({20, 0}), Complex(1.0, 0.0));
}

TEST(Damping, SemigroupToRounding) {
  const auto grid = std::make_shared<const SpectralGrid>(256, 256, 2.0 * pi, 1.0);
  const DriveConfig d;
  auto once = initial_state(grid, d, 4);
  auto twice = once;
  apply_damping(once, d, 0.3);
  apply_damping(twice, d, 0.1);
  apply_damping(twice, d, 0.2);
  // exp(-g a) exp(-g b) and exp(-g (a + b)) agree to rounding, scaled by
  // the condition number 1 + g (a + b) of the exponential.
  double worst = 0.0;
  for (std::size_t i = 0; i < grid->size(); ++i) {
    if (once.eta[i] == Complex{}) continue;
    const double condition = 1.0 + damping_rate(grid->k_magnitude(i), d) * 0.3;
    worst = std::max(worst, std::abs(twice.eta[i] - once.eta[i]) / std::abs(once.eta[i]) / condition);
  }
  EXPECT_LE(worst, 4.0 * std::numeric_limits<double>::epsilon());
}

TEST(Damping, ContractsHighBandAndKeepsSymmetry) {
  const auto grid = std::make_shared<const SpectralGrid>(256, 256, 2.0 * pi, 1.0);
  const DriveConfig d;
  auto s = initial_state(grid, d, 6);
  auto high_action = [&](const SurfaceState& st) {
    double total = 0.0;
    for (std::size_t i = 0; i < grid->size(); ++i) {
      if (grid->k_magnitude(i) > 64.0) total += std::norm(to_normal_variable(st, grid->wavevector(i), 1.0));
    }
    return total;
  };
  double previous = high_action(s);
  for (int i = 0; i < 5; ++i) {
    apply_damping(s, d, 0.05);
    const double now = high_action(s);
    EXPECT_LT(now, previous);
    previous = now;
  }
  EXPECT_EQ(hermitian_defect(s.eta), 0.0);
  EXPECT_EQ(hermitian_defect(s.psi), 0.0);
}

TEST(Forcing, LinearRingWavesKeepModulusAndRotateAtOmega) {
  // Travelling waves in the ring: psi_k = -i (omega/k) eta_k, which matches
  // the prescribed modulus ratio k^(-1/2) inside the ring.
  SimConfig cfg;
  cfg.grid = {64, 64, 2.0 * pi, 0.5};
  cfg.epsilon = 0.0;
  const auto grid = cfg.make_grid();
  auto s = SurfaceState::zero(grid);
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const Wavevector l = grid->wavevector(i);
    const double k = grid->k_magnitude(i);
    if (!in_ring(k, cfg.drive) || !(l.x > 0 || (l.x == 0 && l.y > 0))) continue;
    const double omega = std::sqrt(k);
    const Complex eta = std::polar(prescribed_modulus(k, cfg.drive.eta_exponent, cfg.drive), 0.1 * static_cast<double>(i % 17));
    s.eta[i] = eta;
    s.psi[i] = Complex(0.0, -omega / k) * eta;
    s.eta[grid->conjugate_index(i)] = std::conj(s.eta[i]);
    s.psi[grid->conjugate_index(i)] = std::conj(s.psi[i]);
  }
  const auto initial = s;
  Simulation sim(cfg, s);
  sim.advance(300);
  const double t = sim.state().time;
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const Wavevector l = grid->wavevector(i);
    const double k = grid->k_magnitude(i);
    if (!in_ring(k, cfg.drive) || !(l.x > 0 || (l.x == 0 && l.y > 0))) continue;
    EXPECT_NEAR(std::abs(sim.state().eta[i]) / std::abs(initial.eta[i]), 1.0, 1e-12);
    const double advanced = std::arg(sim.state().eta[i] / initial.eta[i]);
    EXPECT_NEAR(std::remainder(advanced + std::sqrt(k) * t, 2.0 * pi), 0.0, 1e-9) << l.x << "," << l.y;
  }
}
