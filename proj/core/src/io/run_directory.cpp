#include "gravwave/io/run_directory.hpp"

#include <cstdio>
#include <memory>

#include "gravwave/errors.hpp"
#include "gravwave/io/checkpoint.hpp"
#include "gravwave/io/config_file.hpp"
#include "gravwave/io/manifest.hpp"
#include "gravwave/io/probe_stream.hpp"

#ifndef GRAVWAVE_VERSION
#define GRAVWAVE_VERSION "unknown"
#endif

namespace gravwave::io {

std::string checkpoint_name(std::int64_t step) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "ckpt_%010lld.bin", static_cast<long long>(step));
  return buf;
}

RunResult run_to_directory(const RunRequest& request) {
  if (!(request.duration_periods >= 0.0)) throw ConfigError("duration", 0, "must be non-negative");
  const auto& dir = request.output_dir;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());

  RunManifest manifest;
  manifest.code_version = GRAVWAVE_VERSION;
  manifest.started = utc_now();

  std::unique_ptr<Simulation> sim;
  SimConfig config = request.config;
  if (request.resume) {
    Checkpoint ckpt = read_checkpoint(*request.resume);
    if (!request.config_override) config = ckpt.config;
    sim = std::make_unique<Simulation>(config, std::move(ckpt.state));
    manifest.resumed_from = request.resume->string();
  } else {
    sim = std::make_unique<Simulation>(config);
  }
  manifest.config_text = serialize_config(config);
  manifest.seed = config.seed;
  manifest.start_time = sim->state().time;
  manifest.start_step = sim->state().step;

  const std::string fingerprint = config_fingerprint(config);
  std::unique_ptr<ProbeStreamWriter> probes;
  if (sim->probes().size() > 0) {
    const double interval = sim->dt() * config.probes.sample_every;
    const std::int64_t keep = request.resume ? sim->state().step / config.probes.sample_every + 1 : -1;
    probes = std::make_unique<ProbeStreamWriter>(dir, make_probe_header(sim->probes(), interval, 0.0, fingerprint), keep);
  }

  RunResult result;
  const auto checkpoint = [&](const SurfaceState& state) {
    const auto path = dir / checkpoint_name(state.step);
    write_checkpoint(path, config, state);
    if (result.checkpoints.empty() || result.checkpoints.back() != path) result.checkpoints.push_back(path);
  };
  if (!request.resume) checkpoint(sim->state());

  RunCallbacks hooks;
  hooks.on_step = request.extra.on_step;
  hooks.on_probe = [&](double t, std::span<const Complex> values) {
    if (probes) probes->push(t, values);
    if (request.extra.on_probe) request.extra.on_probe(t, values);
  };
  hooks.on_checkpoint = [&](const SurfaceState& state) {
    checkpoint(state);
    if (request.extra.on_checkpoint) request.extra.on_checkpoint(state);
  };

  const double duration = request.duration_periods * config.reference_period();
  try {
    result.stats = sim->run(duration, hooks);
  } catch (const BlowUpError&) {
    // The stepper leaves the state at the last completed step.
    write_checkpoint(dir / "blowup_last_good.bin", config, sim->state());
    if (probes) probes->close();
    throw;
  }
  checkpoint(sim->state());
  if (probes) probes->close();

  manifest.finished = utc_now();
  manifest.end_time = sim->state().time;
  manifest.end_step = sim->state().step;
  std::vector<std::string> outputs;
  for (const auto& c : result.checkpoints) {
    manifest.checkpoints.push_back(c.filename().string());
    outputs.push_back(c.filename().string());
  }
  if (probes) {
    outputs.push_back(kProbeData);
    outputs.push_back(kProbeSidecar);
  }
  record_outputs(manifest, dir, outputs);
  result.manifest = dir / "run.json";
  write_manifest(result.manifest, manifest);
  result.final_state = sim->state();
  return result;
}

}  // namespace gravwave::io
