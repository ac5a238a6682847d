#pragma once

#include <array>
#include <cstdint>

#include "gravwave/dynamics.hpp"

namespace gravwave {

/// Exact rational tableau entry.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  constexpr double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Fehlberg's 13-stage embedded 7(8) pair.
struct Fehlberg78 {
  static constexpr int stages = 13;
  static const std::array<Rational, stages> c;
  static const std::array<std::array<Rational, stages>, stages> a;
  /// 8th-order weights (the propagated solution).
  static const std::array<Rational, stages> b_high;
  /// 7th-order weights (error estimate only).
  static const std::array<Rational, stages> b_low;
};

/// Fixed-step RK7(8) integrator for a SurfaceState. The 8th-order solution
/// is accepted unconditionally; the embedded error estimate is returned
/// for monitoring.
class Rk78Stepper {
 public:
  explicit Rk78Stepper(GridPtr grid);

  /// Advances state in place by dt and returns max|y8 - y7| / max(max|y8|, tiny).
  /// Pins the mean elevation to zero afterwards.
  double advance(SurfaceState& state, PhysicsParams params, double dt);

  RhsEvaluator& rhs() noexcept { return rhs_; }

 private:
  RhsEvaluator rhs_;
  std::array<Tendency, Fehlberg78::stages> k_;
  SpectralField stage_eta_;
  SpectralField stage_psi_;
  std::array<std::array<double, Fehlberg78::stages>, Fehlberg78::stages> a_{};
  std::array<double, Fehlberg78::stages> c_{};
  std::array<double, Fehlberg78::stages> b_{};
  std::array<double, Fehlberg78::stages> e_{};
};

/// One step with the config's dt. Throws IntegrationError when the error
/// estimate exceeds config.error_abort_threshold.
SurfaceState step(const SurfaceState& state, const SimConfig& config);

}  // namespace gravwave
