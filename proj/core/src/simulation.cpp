#include "gravwave/simulation.hpp"

#include <algorithm>
#include <cmath>

#include "gravwave/drive.hpp"
#include "gravwave/errors.hpp"

namespace gravwave {

Simulation::Simulation(SimConfig config, SurfaceState initial)
    : config_(std::move(config)),
      state_(std::move(initial)),
      probes_(state_.eta.grid(), config_.probes, config_.g),
      stepper_(state_.eta.grid_ptr()),
      dt_(config_.time_step()) {
  config_.validate();
  if (!(state_.eta.grid() == *config_.make_grid())) throw ConfigError("initial state grid does not match the config grid");
  const double every = config_.output.checkpoint_every_periods * config_.reference_period();
  checkpoint_steps_ = every > 0.0 ? std::max<std::int64_t>(1, std::llround(every / dt_)) : 0;
  probe_buffer_.resize(probes_.size());
}

Simulation::Simulation(SimConfig config)
    : Simulation(config, initial_state(config.make_grid(), config.drive, config.seed)) {}

std::int64_t Simulation::steps_for(double duration) const {
  if (!(duration >= 0.0) || !std::isfinite(duration)) throw ConfigError("duration", 0, "must be finite and non-negative");
  return std::llround(duration / dt_);
}

RunStats Simulation::advance(std::int64_t steps, const RunCallbacks& callbacks) {
  RunStats stats;
  const PhysicsParams params{config_.g, config_.epsilon};
  const auto sample_every = static_cast<std::int64_t>(config_.probes.sample_every);

  if (state_.step == 0 && callbacks.on_probe && probes_.size() > 0) {
    probes_.sample(state_, probe_buffer_);
    callbacks.on_probe(state_.time, probe_buffer_);
  }

  for (std::int64_t n = 0; n < steps; ++n) {
    const double estimate = stepper_.advance(state_, params, dt_);
    if (estimate > config_.error_abort_threshold) throw IntegrationError(estimate, config_.error_abort_threshold, state_.time);
    if (config_.drive.damping_enabled) apply_damping(state_, config_.drive, dt_);
    if (config_.drive.forcing_enabled) apply_forcing(state_, config_.drive, config_.seed);

    stats.steps += 1;
    stats.max_error_estimate = std::max(stats.max_error_estimate, estimate);
    if (callbacks.on_step) callbacks.on_step(state_, estimate);
    if (callbacks.on_probe && probes_.size() > 0 && state_.step % sample_every == 0) {
      probes_.sample(state_, probe_buffer_);
      callbacks.on_probe(state_.time, probe_buffer_);
    }
    if (callbacks.on_checkpoint && checkpoint_steps_ > 0 && state_.step % checkpoint_steps_ == 0)
      callbacks.on_checkpoint(state_);
  }
  return stats;
}

RunStats Simulation::run(double duration, const RunCallbacks& callbacks) {
  return advance(steps_for(duration), callbacks);
}

SurfaceState run(const SimConfig& config, double duration, const RunCallbacks& callbacks) {
  Simulation sim(config);
  sim.run(duration, callbacks);
  return sim.state();
}

}  // namespace gravwave
