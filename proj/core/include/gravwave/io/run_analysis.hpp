#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "gravwave/config.hpp"
#include "gravwave/phase.hpp"
#include "gravwave/probe.hpp"
#include "gravwave/spectrum.hpp"

namespace gravwave::io {

/// A finished run directory: its config, probe series and checkpoints.
struct RunData {
  std::filesystem::path directory;
  SimConfig config;
  std::vector<ModeProbe> probes;
  /// Checkpoint paths sorted by step.
  std::vector<std::filesystem::path> checkpoints;
};

/// Loads run.json, the probe stream (if any) and the checkpoint list.
/// Probe samples before t_begin are dropped.
RunData load_run(const std::filesystem::path& directory, double t_begin = 0.0);

/// Waveaction spectrum averaged over the given checkpoints whose time is >= t_begin.
WaveactionSpectrum mean_spectrum(std::span<const std::filesystem::path> checkpoints, double t_begin = 0.0,
                                 double bin_width = 1.0);

/// The probe recorded at l, if any.
const ModeProbe* find_probe(std::span<const ModeProbe> probes, Wavevector l);

struct CorrelatorRow {
  Wavevector wavevector;
  double distance = 0.0;
  std::optional<double> amplitude;  // C_{A,A}
  std::optional<double> phase;      // C_{phi,phi}, unwrapped phases
  std::optional<double> factor;     // C_{psi,psi}, unit phase factors
  std::optional<double> mixed;      // C_{A,psi}, A against Re(psi)
};

/// Correlators of the reference probe against every other probe.
std::vector<CorrelatorRow> correlators(std::span<const ModeProbe> probes, const ModeProbe& reference);

/// Phase runs of every probe.
std::vector<RunEvents> run_events(std::span<const ModeProbe> probes, RunDetectorOptions options = {});

}  // namespace gravwave::io
