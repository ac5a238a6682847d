#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gravwave::cli {

struct SimulateOptions {
  std::string config;
  std::optional<std::uint64_t> seed;
  double duration = 0.0;
  std::string output_dir;
  std::string resume;
};

struct ResonanceOptions {
  std::string mode = "brute";
  std::int64_t k_max = 60;
  double tolerance = 1e-9;
  int s_max = 10;
  int t_max = 10;
  int m_max = 3;
  int n_max = 3;
  bool axis_only = false;
  bool include_trivial = false;
  std::vector<std::int64_t> quartet;
  std::string output;
};

struct DeltaCritCliOptions {
  std::int64_t grid = 64;
  std::array<double, 2> ring{6.0, 9.0};
  std::string rule = "pair_source";
  double delta_low = 1e-7;
  double delta_high = 1e-3;
  double relative_width = 0.02;
  int max_generations = 64;
  std::optional<double> delta;
};

struct AnalyzeOptions {
  std::string target;
  std::vector<std::string> inputs;
  std::string output;
  double from_period = 0.0;
  double bin_width = 1.0;
  std::array<double, 2> ring{13.0, 17.0};
  std::array<double, 2> low{13.0, 29.0};
  std::array<double, 2> high{30.0, 45.0};
  std::array<int, 2> k1{15, 0};
  int p_max = 6;
  bool normalize = true;
  std::size_t window = 4096;
};

int simulate(const SimulateOptions& options);
int resonances(const ResonanceOptions& options);
int delta_crit(const DeltaCritCliOptions& options);
int analyze(const AnalyzeOptions& options);

}  // namespace gravwave::cli
