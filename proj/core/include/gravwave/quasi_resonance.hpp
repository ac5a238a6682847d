#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gravwave/grid.hpp"

namespace gravwave {

enum class SpreadVerdict { saturates, fills_grid, capped };

/// How a generation grows.
///  pair_source:  k1, k2 in the current set; every k3, k4 in the box with
///                k1 + k2 = k3 + k4 and |w1 + w2 - w3 - w4| < delta joins.
///  three_in_set: k1, k2, k3 in the current set; only k4 joins.
enum class GenerationRule { pair_source, three_in_set };

std::string_view to_string(SpreadVerdict v);

struct GenerationOptions {
  int max_generations = 64;
  /// A new mode within this distance of the box boundary counts as filling.
  std::int64_t boundary_distance = 2;
  GenerationRule rule = GenerationRule::pair_source;
};

/// Cumulative mode sets, generations[0] being the (box-clipped) initial set.
/// Each set is sorted and contains its predecessor.
struct GenerationSet {
  std::vector<std::vector<Wavevector>> generations;
  std::int64_t k_max = 0;
  double delta = 0.0;
  SpreadVerdict verdict = SpreadVerdict::capped;
};

/// Integer wavevectors in [-k_max, k_max]^2 with k_low < |l| < k_high.
std::vector<Wavevector> ring_modes(double k_low, double k_high, std::int64_t k_max);

/// Next generation = current plus the modes admitted by options.rule (origin
/// excluded). Exact resonances are always admitted, so delta = 0 follows the
/// exact-resonance closure only.
GenerationSet quasi_generations(std::span<const Wavevector> initial, double delta, std::int64_t k_max,
                                const GenerationOptions& options = {});

struct DeltaCritOptions {
  double delta_low = 1e-7;
  double delta_high = 1e-3;
  /// Bisection (in log delta) stops when delta_high / delta_low <= 1 + relative_width.
  double relative_width = 0.02;
  GenerationOptions generations;
};

struct DeltaCritResult {
  /// Geometric mean of the final bracket.
  double delta_crit = 0.0;
  double delta_saturating = 0.0;
  double delta_filling = 0.0;
  struct Evaluation {
    double delta;
    SpreadVerdict verdict;
    std::size_t generations;
    std::size_t modes;
  };
  std::vector<Evaluation> history;
};

/// Saturation and filling verdicts disagree with monotonicity in delta, or a
/// run hit the generation cap without a verdict.
class BracketError : public std::runtime_error {
 public:
  BracketError(const std::string& what, double delta_a, double delta_b)
      : std::runtime_error(what), delta_a_(delta_a), delta_b_(delta_b) {}
  double delta_a() const noexcept { return delta_a_; }
  double delta_b() const noexcept { return delta_b_; }

 private:
  double delta_a_;
  double delta_b_;
};

DeltaCritResult find_delta_crit(std::span<const Wavevector> initial, std::int64_t k_max,
                                const DeltaCritOptions& options = {});

}  // namespace gravwave
