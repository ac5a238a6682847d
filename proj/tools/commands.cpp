#include "commands.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <limits>

#include "gravwave/amplitude_statistics.hpp"
#include "gravwave/errors.hpp"
#include "gravwave/frequency.hpp"
#include "gravwave/io/checkpoint.hpp"
#include "gravwave/io/config_file.hpp"
#include "gravwave/io/run_analysis.hpp"
#include "gravwave/io/run_directory.hpp"
#include "gravwave/io/table_writer.hpp"
#include "gravwave/phase.hpp"
#include "gravwave/quasi_resonance.hpp"
#include "gravwave/resonance.hpp"
#include "gravwave/spectrum.hpp"

namespace gravwave::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

fs::path output_path(const std::string& option) { return option == "-" ? fs::path() : fs::path(option); }

double value_or_missing(const std::optional<double>& v) { return v ? *v : kMissing; }

json vec(Wavevector l) { return json::array({l.x, l.y}); }

json quartet_record(const Quartet& q) {
  return {{"k", vec(q.k)},
          {"k1", vec(q.k1)},
          {"k2", vec(q.k2)},
          {"k3", vec(q.k3)},
          {"detuning", q.detuning},
          {"class", std::string(to_string(q.classification))},
          {"family", std::string(to_string(q.family))}};
}

}  // namespace

int simulate(const SimulateOptions& options) {
  io::RunRequest request;
  if (!options.config.empty()) {
    request.config = io::load_config(options.config);
    request.config_override = true;
  } else if (!options.resume.empty()) {
    request.config = io::read_checkpoint(options.resume).config;
  } else {
    throw ConfigError("simulate", 0, "either --config or --resume is required");
  }
  if (options.seed) {
    request.config.seed = *options.seed;
    request.config_override = true;
  }
  if (!options.output_dir.empty()) {
    request.config.output.directory = options.output_dir;
  } else if (const char* env = std::getenv("GRAVWAVE_OUTPUT_DIR"); env && *env) {
    request.config.output.directory = env;
  }
  if (!(options.duration >= 0.0)) throw ConfigError("duration", 0, "must be non-negative");
  request.duration_periods = options.duration;
  request.output_dir = request.config.output.directory;
  if (!options.resume.empty()) request.resume = fs::path(options.resume);

  const auto result = io::run_to_directory(request);
  std::cout << json{{"manifest", result.manifest.string()},
                    {"steps", result.stats.steps},
                    {"time", result.final_state.time},
                    {"checkpoints", result.checkpoints.size()},
                    {"max_error_estimate", result.stats.max_error_estimate}}
                   .dump()
            << std::endl;
  return 0;
}

int resonances(const ResonanceOptions& options) {
  std::ofstream file;
  if (!options.output.empty() && options.output != "-") {
    file.open(options.output, std::ios::trunc);
    if (!file) throw IoError("cannot write " + options.output);
  }
  std::ostream& out = file.is_open() ? file : std::cout;

  if (options.mode == "check") {
    if (options.quartet.size() != 8) throw ConfigError("quartet", 0, "expects eight integers");
    const auto& v = options.quartet;
    const Quartet q = make_quartet({v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}, {v[6], v[7]});
    auto record = quartet_record(q);
    record["momentum_conserved"] = q.momentum_conserved();
    record["verdict"] = std::string(to_string(is_exact_resonance(q)));
    out << record.dump() << '\n';
  } else if (options.mode == "tridents") {
    for (const auto& q : tridents(options.s_max, options.t_max, options.k_max)) out << quartet_record(q).dump() << '\n';
  } else if (options.mode == "collinear") {
    for (const auto& c : collinear_candidates(options.m_max, options.n_max)) {
      auto record = quartet_record(c.quartet);
      record["m"] = c.m;
      record["n"] = c.n;
      record["values"] = c.values;
      record["verified_pairing"] = c.verified_pairing ? json(*c.verified_pairing) : json(nullptr);
      out << record.dump() << '\n';
    }
  } else {
    BruteForceOptions brute;
    brute.axis_only = options.axis_only;
    brute.include_trivial = options.include_trivial;
    for (const auto& q : brute_force_exact(options.k_max, options.tolerance, brute)) out << quartet_record(q).dump() << '\n';
  }
  out.flush();
  if (out.fail()) throw IoError("failed writing resonances");
  return 0;
}

int delta_crit(const DeltaCritCliOptions& options) {
  GenerationOptions gen;
  gen.max_generations = options.max_generations;
  gen.rule = options.rule == "three_in_set" ? GenerationRule::three_in_set : GenerationRule::pair_source;
  const auto ring = ring_modes(options.ring[0], options.ring[1], options.grid);

  if (options.delta) {
    const auto set = quasi_generations(ring, *options.delta, options.grid, gen);
    json sizes = json::array();
    for (const auto& g : set.generations) sizes.push_back(g.size());
    std::cout << json{{"delta", *options.delta},
                      {"k_max", options.grid},
                      {"rule", options.rule},
                      {"verdict", std::string(to_string(set.verdict))},
                      {"generation_sizes", sizes}}
                     .dump()
              << std::endl;
    return 0;
  }

  DeltaCritOptions dc;
  dc.delta_low = options.delta_low;
  dc.delta_high = options.delta_high;
  dc.relative_width = options.relative_width;
  dc.generations = gen;
  const auto result = find_delta_crit(ring, options.grid, dc);
  json history = json::array();
  for (const auto& e : result.history) {
    history.push_back({{"delta", e.delta},
                       {"verdict", std::string(to_string(e.verdict))},
                       {"generations", e.generations},
                       {"modes", e.modes}});
  }
  std::cout << json{{"delta_crit", result.delta_crit},
                    {"delta_saturating", result.delta_saturating},
                    {"delta_filling", result.delta_filling},
                    {"k_max", options.grid},
                    {"rule", options.rule},
                    {"initial_modes", ring.size()},
                    {"history", history}}
                   .dump()
            << std::endl;
  return 0;
}

int analyze(const AnalyzeOptions& options) {
  const fs::path out = output_path(options.output);

  if (options.target == "spectrum") {
    std::vector<fs::path> files;
    SimConfig config;
    if (options.inputs.size() == 1 && fs::is_directory(options.inputs[0])) {
      const auto run = io::load_run(options.inputs[0]);
      files = run.checkpoints;
      config = run.config;
    } else {
      for (const auto& p : options.inputs) files.emplace_back(p);
      if (files.empty()) throw ConfigError("inputs", 0, "no checkpoint given");
      config = io::read_checkpoint(files.front()).config;
    }
    const double t_begin = options.from_period * config.reference_period();
    const auto spectrum = io::mean_spectrum(files, t_begin, options.bin_width);
    io::TableWriter table(out, "waveaction spectrum n(k) averaged over checkpoints",
                          "k: 2pi/L; n: normal-variable action per mode; compensated: n k^4",
                          io::config_fingerprint(config), {"k_center", "k_mean", "modes", "n", "compensated"});
    for (const auto& b : spectrum.bins) {
      table.row({b.k_center, b.k_mean, static_cast<double>(b.modes), b.n, b.compensated});
    }
    table.close();
    return 0;
  }

  if (options.inputs.size() != 1) throw ConfigError("inputs", 0, "expects one run directory");
  const auto config = io::load_run(options.inputs[0], std::numeric_limits<double>::infinity()).config;
  const double t_begin = options.from_period * config.reference_period();
  const auto data = io::load_run(options.inputs[0], t_begin);
  const auto fingerprint = io::config_fingerprint(data.config);
  if (data.probes.empty()) throw AnalysisError("run has no probe records");

  if (options.target == "pdf" || options.target == "moments") {
    const Ring ring{options.ring[0], options.ring[1]};
    const auto s = ring_samples(data.probes, ring, options.normalize);
    if (options.target == "moments") {
      const auto ratios = moment_ratios(s, options.p_max);
      io::TableWriter table(out, "moment ratio <s^p> / (p! <s>^p)", "dimensionless", fingerprint, {"p", "ratio"});
      for (std::size_t i = 0; i < ratios.size(); ++i) table.row({static_cast<double>(i + 1), ratios[i]});
      table.close();
      return 0;
    }
    const auto pdf = amplitude_pdf(s, {}, ring);
    io::TableWriter table(out, "amplitude PDF of s = |a_k|^2", "s: normal-variable action (per-mode mean if normalized)",
                          fingerprint, {"s_low", "s_high", "count", "density", "exponential_fit"});
    for (std::size_t b = 0; b < pdf.counts.size(); ++b) {
      table.row({pdf.edges[b], pdf.edges[b + 1], static_cast<double>(pdf.counts[b]), pdf.density(b),
                 pdf.core.density(pdf.bin_center(b))});
    }
    table.close();
    return 0;
  }

  if (options.target == "peaks" || options.target == "run-rates") {
    PeakOptions peak_options;
    peak_options.welch.window = options.window;
    std::vector<std::optional<PeakReport>> reports;
    for (const auto& p : data.probes) {
      try {
        reports.push_back(frequency_peaks(p, peak_options));
      } catch (const AnalysisError&) {
        reports.emplace_back();
      }
    }
    if (options.target == "peaks") {
      io::TableWriter table(out, "lab-frame frequency peaks per probe", "frequency: rad per unit time", fingerprint,
                            {"kx", "ky", "k", "omega_linear", "main", "secondary", "sub_linear", "squared_ratio",
                             "power_ratio"});
      for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& p = data.probes[i];
        if (!reports[i]) {
          table.row({static_cast<double>(p.wavevector.x), static_cast<double>(p.wavevector.y), p.k, p.omega, kMissing,
                     kMissing, kMissing, kMissing, kMissing});
          continue;
        }
        const auto& r = *reports[i];
        table.row({static_cast<double>(p.wavevector.x), static_cast<double>(p.wavevector.y), p.k, r.omega_linear,
                   r.main.frequency,
                   r.secondary ? r.secondary->frequency : kMissing, r.sub_linear ? r.sub_linear->frequency : kMissing,
                   value_or_missing(r.squared_ratio), value_or_missing(r.power_ratio)});
      }
      table.close();
      return 0;
    }
    std::vector<ModeProbe> probes;
    std::vector<PeakReport> peaks;
    std::vector<std::vector<PhaseRun>> runs;
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (!reports[i]) continue;
      probes.push_back(data.probes[i]);
      peaks.push_back(*reports[i]);
      runs.push_back(detect_phase_runs(probes.back()));
    }
    const auto rows = run_rate_vs_peak(probes, runs, peaks);
    io::TableWriter table(out, "mean phase-run rate against peak offset", "rad per unit time", fingerprint,
                          {"kx", "ky", "k", "superlinear_rate", "superlinear_offset", "sublinear_rate",
                           "sublinear_offset"});
    for (const auto& r : rows) {
      table.row({static_cast<double>(r.wavevector.x), static_cast<double>(r.wavevector.y), r.k,
                 value_or_missing(r.superlinear_rate), value_or_missing(r.superlinear_offset),
                 value_or_missing(r.sublinear_rate), value_or_missing(r.sublinear_offset)});
    }
    table.close();
    return 0;
  }

  if (options.target == "runs") {
    io::TableWriter table(out, "phase runs", "time: simulation units; change: rad; rate: rad per unit time",
                          fingerprint, {"kx", "ky", "start", "end", "direction", "total_change", "mean_rate"});
    for (const auto& events : io::run_events(data.probes)) {
      for (const auto& r : events.runs) {
        table.row({static_cast<double>(r.wavevector.x), static_cast<double>(r.wavevector.y), r.start, r.end,
                   r.direction == RunDirection::up ? 1.0 : -1.0, r.total_change, r.mean_rate});
      }
    }
    table.close();
    return 0;
  }

  if (options.target == "avalanche" || options.target == "avalanche-lag") {
    AvalancheOptions av;
    av.low = {options.low[0], options.low[1]};
    av.high = {options.high[0], options.high[1]};
    av.bin_width = options.bin_width;
    av.t_begin = t_begin;
    const auto series = avalanche_series(io::run_events(data.probes), av);
    if (options.target == "avalanche") {
      io::TableWriter table(out, "percentage of ring modes inside a phase run", "percent", fingerprint,
                            {"time", "low_percent", "high_percent"});
      for (std::size_t i = 0; i < series.time.size(); ++i) {
        table.row({series.time[i], series.low_percent[i], series.high_percent[i]});
      }
      table.close();
    } else {
      io::TableWriter table(out, "lagged correlation of low-ring against high-ring run percentage",
                            "lag: simulation units; positive means the low ring leads", fingerprint,
                            {"lag_bins", "lag_time", "correlation"});
      for (std::size_t i = 0; i < series.lags.size(); ++i) {
        table.row({static_cast<double>(series.lags[i]), series.lags[i] * av.bin_width, series.correlation[i]});
      }
      table.close();
    }
    return 0;
  }

  const Wavevector k1{options.k1[0], options.k1[1]};
  const auto* reference = io::find_probe(data.probes, k1);
  if (!reference) throw AnalysisError("no probe recorded at the reference wavevector");
  io::TableWriter table(out, "two-point correlators against the reference mode", "dimensionless", fingerprint,
                        {"kx", "ky", "distance", "C_AA", "C_phiphi", "C_psipsi", "C_Apsi"});
  for (const auto& r : io::correlators(data.probes, *reference)) {
    table.row({static_cast<double>(r.wavevector.x), static_cast<double>(r.wavevector.y), r.distance,
               value_or_missing(r.amplitude), value_or_missing(r.phase), value_or_missing(r.factor),
               value_or_missing(r.mixed)});
  }
  table.close();
  return 0;
}

}  // namespace gravwave::cli
