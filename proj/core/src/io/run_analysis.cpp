#include "gravwave/io/run_analysis.hpp"

#include <algorithm>

#include "gravwave/correlation.hpp"
#include "gravwave/errors.hpp"
#include "gravwave/io/checkpoint.hpp"
#include "gravwave/io/config_file.hpp"
#include "gravwave/io/manifest.hpp"
#include "gravwave/io/probe_stream.hpp"

namespace gravwave::io {

namespace fs = std::filesystem;

RunData load_run(const fs::path& directory, double t_begin) {
  RunData run;
  run.directory = directory;
  const auto manifest = read_manifest(directory / "run.json");
  run.config = parse_config(manifest.config_text);
  if (fs::exists(directory / kProbeSidecar)) {
    run.probes = read_probe_stream(directory);
    for (auto& p : run.probes) {
      std::size_t skip = 0;
      while (skip < p.samples.size() && p.time(skip) < t_begin) ++skip;
      p.samples.erase(p.samples.begin(), p.samples.begin() + static_cast<std::ptrdiff_t>(skip));
      p.t0 += p.sample_interval * static_cast<double>(skip);
    }
  }
  for (const auto& entry : fs::directory_iterator(directory)) {
    const auto name = entry.path().filename().string();
    if (name.starts_with("ckpt_") && name.ends_with(".bin")) run.checkpoints.push_back(entry.path());
  }
  std::sort(run.checkpoints.begin(), run.checkpoints.end());
  return run;
}

WaveactionSpectrum mean_spectrum(std::span<const fs::path> checkpoints, double t_begin, double bin_width) {
  std::optional<SpectrumAccumulator> acc;
  for (const auto& path : checkpoints) {
    const auto ck = read_checkpoint(path);
    if (ck.state.time < t_begin) continue;
    if (!acc) acc.emplace(ck.state.eta.grid_ptr(), ck.config.g);
    acc->add(ck.state);
  }
  if (!acc) throw AnalysisError("mean_spectrum: no checkpoint at or after t = " + std::to_string(t_begin));
  return acc->spectrum(bin_width);
}

const ModeProbe* find_probe(std::span<const ModeProbe> probes, Wavevector l) {
  for (const auto& p : probes) {
    if (p.wavevector == l) return &p;
  }
  return nullptr;
}

std::vector<CorrelatorRow> correlators(std::span<const ModeProbe> probes, const ModeProbe& reference) {
  const auto ref = mode_variables(reference.interaction());
  std::vector<double> ref_re(ref.phase_factor.size());
  for (std::size_t j = 0; j < ref_re.size(); ++j) ref_re[j] = ref.phase_factor[j].real();
  std::vector<CorrelatorRow> rows;
  for (const auto& p : probes) {
    if (p.wavevector == reference.wavevector || p.samples.size() != reference.samples.size()) continue;
    const auto v = mode_variables(p.interaction());
    std::vector<double> re(v.phase_factor.size());
    for (std::size_t j = 0; j < re.size(); ++j) re[j] = v.phase_factor[j].real();
    CorrelatorRow row;
    row.wavevector = p.wavevector;
    const Wavevector d = p.wavevector - reference.wavevector;
    row.distance = std::hypot(static_cast<double>(d.x), static_cast<double>(d.y));
    row.amplitude = correlation(ref.amplitude, v.amplitude);
    row.phase = correlation(ref.phase, v.phase);
    row.factor = correlation(ref.phase_factor, v.phase_factor);
    row.mixed = correlation(ref.amplitude, re);
    rows.push_back(row);
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.distance < b.distance; });
  return rows;
}

std::vector<RunEvents> run_events(std::span<const ModeProbe> probes, RunDetectorOptions options) {
  std::vector<RunEvents> out;
  out.reserve(probes.size());
  for (const auto& p : probes) out.push_back({p.wavevector, p.k, detect_phase_runs(p, options)});
  return out;
}

}  // namespace gravwave::io
