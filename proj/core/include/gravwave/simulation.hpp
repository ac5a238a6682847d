#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "gravwave/config.hpp"
#include "gravwave/probe.hpp"
#include "gravwave/rk78.hpp"

namespace gravwave {

/// Hooks invoked synchronously from the stepping loop. Each receives a
/// read-only view that is only valid for the duration of the call.
struct RunCallbacks {
  /// After every accepted step (integrate, damp, force).
  std::function<void(const SurfaceState&, double error_estimate)> on_step;
  /// Probe values at every probes.sample_every-th step (and at step 0).
  std::function<void(double time, std::span<const Complex> values)> on_probe;
  /// At the checkpoint cadence.
  std::function<void(const SurfaceState&)> on_checkpoint;
};

struct RunStats {
  std::int64_t steps = 0;
  double max_error_estimate = 0.0;
};

/// Owns the evolving state and drives the step / damp / force / record loop.
class Simulation {
 public:
  Simulation(SimConfig config, SurfaceState initial);
  /// Starts from initial_state(grid, config.drive, config.seed).
  explicit Simulation(SimConfig config);

  const SimConfig& config() const noexcept { return config_; }
  const SurfaceState& state() const noexcept { return state_; }
  const ProbeSet& probes() const noexcept { return probes_; }
  double dt() const noexcept { return dt_; }
  std::int64_t checkpoint_interval_steps() const noexcept { return checkpoint_steps_; }

  /// Number of fixed steps covering `duration` time units.
  std::int64_t steps_for(double duration) const;

  RunStats advance(std::int64_t steps, const RunCallbacks& callbacks = {});
  /// Advances by steps_for(duration); duration 0 leaves the state unchanged.
  RunStats run(double duration, const RunCallbacks& callbacks = {});

 private:
  SimConfig config_;
  SurfaceState state_;
  ProbeSet probes_;
  Rk78Stepper stepper_;
  double dt_;
  std::int64_t checkpoint_steps_;
  std::vector<Complex> probe_buffer_;
};

/// Convenience: fresh simulation, run for `duration` time units, return the final state.
SurfaceState run(const SimConfig& config, double duration, const RunCallbacks& callbacks = {});

}  // namespace gravwave
