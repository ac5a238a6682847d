#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gravwave/simulation.hpp"

namespace gravwave::io {

struct RunRequest {
  SimConfig config;
  /// In periods of the reference mode (output.reference_k).
  double duration_periods = 0.0;
  std::filesystem::path output_dir;
  /// Continue from this checkpoint; its embedded config is used unless
  /// `config_override` is set, and the probe stream is truncated to the
  /// checkpoint step and appended to.
  std::optional<std::filesystem::path> resume;
  bool config_override = false;
  /// Invoked alongside the driver's own hooks.
  RunCallbacks extra;
};

struct RunResult {
  std::filesystem::path manifest;
  std::vector<std::filesystem::path> checkpoints;
  RunStats stats;
  SurfaceState final_state;
};

/// File name of the checkpoint taken at `step`, e.g. ckpt_0000001234.bin.
std::string checkpoint_name(std::int64_t step);

/// Runs a simulation into output_dir: the initial (or resumed) state and
/// the final state are checkpointed alongside the configured cadence, probes
/// stream to probes.bin/probes.json and run.json lists digests of everything.
/// On a blow-up the last completed state goes to blowup_last_good.bin before
/// the error propagates.
RunResult run_to_directory(const RunRequest& request);

}  // namespace gravwave::io
