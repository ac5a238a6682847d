#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <json.hpp>

#include "commands.hpp"
#include "gravwave/errors.hpp"
#include "gravwave/quasi_resonance.hpp"

namespace {

enum ExitCode { ok = 0, other = 1, config = 2, io = 3, blow_up = 4, analysis = 5 };

int report(ExitCode code, const std::string& kind, const std::string& message, nlohmann::json extra = {}) {
  nlohmann::json record{{"error", kind}, {"message", message}, {"exit_code", static_cast<int>(code)}};
  if (extra.is_object()) record.update(extra);
  std::cerr << record.dump() << std::endl;
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace gravwave;
  CLI::App app{"Discrete gravity-wave turbulence: simulation, resonance atlas and diagnostics", "gravwave"};
  app.require_subcommand(1);

  cli::SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "Run the simulation and write checkpoints, probes and run.json");
  simulate->add_option("--config", sim.config, "Configuration file (INI)");
  simulate->add_option("--seed", sim.seed, "Override the RNG seed");
  simulate->add_option("--duration", sim.duration, "Duration in periods of the reference mode")->required();
  simulate->add_option("--output-dir", sim.output_dir, "Output directory (overrides GRAVWAVE_OUTPUT_DIR and the config)");
  simulate->add_option("--resume", sim.resume, "Resume from this checkpoint");

  cli::ResonanceOptions res;
  auto* resonances = app.add_subcommand("resonances", "Enumerate or check exact four-wave resonances (JSON lines)");
  resonances->add_option("--mode", res.mode, "brute | tridents | collinear | check")
      ->check(CLI::IsMember({"brute", "tridents", "collinear", "check"}));
  resonances->add_option("--k-max", res.k_max, "Box half-width for brute force, bound for trident rescaling");
  resonances->add_option("--tolerance", res.tolerance, "Floating-point detuning prefilter for brute force");
  resonances->add_option("--s-max", res.s_max);
  resonances->add_option("--t-max", res.t_max);
  resonances->add_option("--m-max", res.m_max);
  resonances->add_option("--n-max", res.n_max);
  resonances->add_flag("--axis-only", res.axis_only, "Restrict brute force to the x axis");
  resonances->add_flag("--include-trivial", res.include_trivial, "Also emit pair exchanges {k,k1} = {k2,k3}");
  resonances->add_option("--quartet", res.quartet, "kx ky k1x k1y k2x k2y k3x k3y for --mode check")->expected(8);
  resonances->add_option("--output", res.output, "Write to this file instead of stdout");

  cli::DeltaCritCliOptions dc;
  auto* delta = app.add_subcommand("delta-crit", "Bisect the critical broadening on [-grid, grid]^2");
  delta->add_option("--grid", dc.grid, "Box half-width k_max");
  delta->add_option("--ring", dc.ring, "Initial ring k_low k_high (open)");
  delta->add_option("--rule", dc.rule, "pair_source | three_in_set")
      ->check(CLI::IsMember({"pair_source", "three_in_set"}));
  delta->add_option("--low", dc.delta_low, "Saturating end of the bracket");
  delta->add_option("--high", dc.delta_high, "Filling end of the bracket");
  delta->add_option("--relative-width", dc.relative_width, "Stop when high/low - 1 falls below this");
  delta->add_option("--max-generations", dc.max_generations);
  delta->add_option("--delta", dc.delta, "Only report generations for this broadening");

  cli::AnalyzeOptions an;
  auto* analyze = app.add_subcommand("analyze", "Diagnostics over checkpoints or a run directory");
  analyze->add_option("target", an.target, "spectrum | pdf | moments | peaks | runs | run-rates | avalanche | avalanche-lag | correlators")
      ->required()
      ->check(CLI::IsMember({"spectrum", "pdf", "moments", "peaks", "runs", "run-rates", "avalanche", "avalanche-lag", "correlators"}));
  analyze->add_option("inputs", an.inputs, "Run directory, or checkpoint files for spectrum")->required();
  analyze->add_option("--output", an.output, "Output file (default stdout)");
  analyze->add_option("--from-period", an.from_period, "Discard data before this many reference periods");
  analyze->add_option("--bin-width", an.bin_width, "Spectrum bin width or avalanche time bin");
  analyze->add_option("--ring", an.ring, "Ring for pdf/moments");
  analyze->add_option("--low", an.low, "Low avalanche ring (open)");
  analyze->add_option("--high", an.high, "High avalanche ring (open)");
  analyze->add_option("--k1", an.k1, "Reference wavevector for correlators");
  analyze->add_option("--p-max", an.p_max, "Highest moment order");
  analyze->add_option("--normalize", an.normalize, "Normalize s by each mode's mean before pooling");
  analyze->add_option("--window", an.window, "Welch window length (samples)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report(config, "usage", e.what());
  }

  try {
    if (*simulate) return cli::simulate(sim);
    if (*resonances) return cli::resonances(res);
    if (*delta) return cli::delta_crit(dc);
    if (*analyze) return cli::analyze(an);
  } catch (const ConfigError& e) {
    return report(config, "config", e.what(), {{"key", e.key_path()}, {"line", e.line()}});
  } catch (const IoError& e) {
    return report(io, "io", e.what());
  } catch (const BlowUpError& e) {
    return report(blow_up, "blow_up", e.what(),
                  {{"wavevector", {e.where().x, e.where().y}}, {"time", e.time()}});
  } catch (const IntegrationError& e) {
    return report(blow_up, "integration", e.what(), {{"estimate", e.estimate()}});
  } catch (const BracketError& e) {
    return report(analysis, "bracket", e.what(), {{"delta_a", e.delta_a()}, {"delta_b", e.delta_b()}});
  } catch (const AnalysisError& e) {
    return report(analysis, "analysis", e.what());
  } catch (const std::exception& e) {
    return report(other, "internal", e.what());
  }
  return other;
}
