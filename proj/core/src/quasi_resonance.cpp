#include "gravwave/quasi_resonance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gravwave/resonance.hpp"

namespace gravwave {
namespace {

// Detuning below which a candidate is handed to the exact test.
constexpr double kExactScreen = 1e-10;

struct PairEntry {
  double omega;
  std::uint32_t i;
  std::uint32_t j;
};

class Box {
 public:
  explicit Box(std::int64_t k_max) : k_max_(k_max), side_(2 * k_max + 1) {}

  bool contains(Wavevector l) const { return std::abs(l.x) <= k_max_ && std::abs(l.y) <= k_max_; }
  std::size_t slot(Wavevector l) const { return static_cast<std::size_t>((l.x + k_max_) * side_ + (l.y + k_max_)); }
  std::size_t slots() const { return static_cast<std::size_t>(side_ * side_); }
  Wavevector at(std::size_t s) const {
    const auto si = static_cast<std::int64_t>(s);
    return {si / side_ - k_max_, si % side_ - k_max_};
  }
  bool near_boundary(Wavevector l, std::int64_t distance) const {
    return std::max(std::abs(l.x), std::abs(l.y)) >= k_max_ - distance;
  }

 private:
  std::int64_t k_max_;
  std::int64_t side_;
};

// Pair sums of the current set, grouped by P = k1 + k2 and sorted by w1 + w2.
class PairTable {
 public:
  PairTable(const std::vector<Wavevector>& set, const std::vector<double>& omega, std::int64_t k_max)
      : k_max_(k_max), side_(4 * k_max + 1) {
    offsets_.assign(static_cast<std::size_t>(side_ * side_) + 1, 0);
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (std::size_t j = i; j < set.size(); ++j) ++offsets_[bucket(set[i] + set[j]) + 1];
    }
    for (std::size_t b = 1; b < offsets_.size(); ++b) offsets_[b] += offsets_[b - 1];
    entries_.resize(offsets_.back());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (std::size_t j = i; j < set.size(); ++j) {
        entries_[fill[bucket(set[i] + set[j])]++] = {omega[i] + omega[j], static_cast<std::uint32_t>(i),
                                                     static_cast<std::uint32_t>(j)};
      }
    }
    for (std::size_t b = 0; b + 1 < offsets_.size(); ++b) {
      std::sort(entries_.begin() + static_cast<std::ptrdiff_t>(offsets_[b]),
                entries_.begin() + static_cast<std::ptrdiff_t>(offsets_[b + 1]),
                [](const PairEntry& a, const PairEntry& c) { return a.omega < c.omega; });
    }
  }

  template <class Fn>
  void for_each_sum(Fn&& fn) const {
    for (std::size_t b = 0; b + 1 < offsets_.size(); ++b) {
      if (offsets_[b + 1] == offsets_[b]) continue;
      const auto bi = static_cast<std::int64_t>(b);
      fn(Wavevector{bi / side_ - 2 * k_max_, bi % side_ - 2 * k_max_});
    }
  }

  std::span<const PairEntry> pairs(Wavevector sum) const {
    const std::size_t b = bucket(sum);
    return {entries_.data() + offsets_[b], offsets_[b + 1] - offsets_[b]};
  }

 private:
  std::size_t bucket(Wavevector p) const {
    return static_cast<std::size_t>((p.x + 2 * k_max_) * side_ + (p.y + 2 * k_max_));
  }

  std::int64_t k_max_;
  std::int64_t side_;
  std::vector<std::size_t> offsets_;
  std::vector<PairEntry> entries_;
};

bool admits(std::span<const PairEntry> pairs, const std::vector<Wavevector>& set, Wavevector k3, Wavevector k4,
            double target, double delta) {
  const double reach = std::max(delta, kExactScreen);
  auto it = std::lower_bound(pairs.begin(), pairs.end(), target - reach,
                             [](const PairEntry& e, double v) { return e.omega < v; });
  for (; it != pairs.end() && it->omega <= target + reach; ++it) {
    const double gap = std::abs(it->omega - target);
    if (gap < delta) return true;
    if (gap <= kExactScreen &&
        is_exact_resonance(set[it->i], set[it->j], k3, k4) == ResonanceVerdict::exact) {
      return true;
    }
  }
  return false;
}

bool admits(const PairTable& table, const std::vector<Wavevector>& set, Wavevector k3, Wavevector k4, double target,
            double delta) {
  const auto pairs = table.pairs(k3 + k4);
  if (pairs.empty()) return false;
  return admits(pairs, set, k3, k4, target, delta);
}

}  // namespace

std::string_view to_string(SpreadVerdict v) {
  switch (v) {
    case SpreadVerdict::saturates: return "saturates";
    case SpreadVerdict::fills_grid: return "fills-grid";
    default: return "capped";
  }
}

std::vector<Wavevector> ring_modes(double k_low, double k_high, std::int64_t k_max) {
  std::vector<Wavevector> out;
  for (std::int64_t x = -k_max; x <= k_max; ++x) {
    for (std::int64_t y = -k_max; y <= k_max; ++y) {
      const double k = std::sqrt(static_cast<double>(x * x + y * y));
      if (k > k_low && k < k_high) out.push_back({x, y});
    }
  }
  return out;
}

GenerationSet quasi_generations(std::span<const Wavevector> initial, double delta, std::int64_t k_max,
                                const GenerationOptions& options) {
  GenerationSet result;
  result.k_max = k_max;
  result.delta = delta;
  const Box box(k_max);

  std::vector<char> member(box.slots(), 0);
  std::vector<Wavevector> current;
  for (Wavevector l : initial) {
    if (box.contains(l) && !member[box.slot(l)]) {
      member[box.slot(l)] = 1;
      current.push_back(l);
    }
  }
  std::sort(current.begin(), current.end());
  result.generations.push_back(current);
  if (current.empty()) {
    result.verdict = SpreadVerdict::saturates;
    return result;
  }

  std::vector<double> omega_grid(box.slots());
  for (std::size_t s = 0; s < box.slots(); ++s) omega_grid[s] = lattice_frequency(box.at(s));

  while (static_cast<int>(result.generations.size()) < options.max_generations) {
    std::vector<double> omega(current.size());
    for (std::size_t i = 0; i < current.size(); ++i) omega[i] = omega_grid[box.slot(current[i])];
    const PairTable table(current, omega, k_max);

    std::vector<Wavevector> fresh;
    if (options.rule == GenerationRule::three_in_set) {
      for (std::size_t s = 0; s < box.slots(); ++s) {
        if (member[s]) continue;
        const Wavevector k4 = box.at(s);
        if (k4 == Wavevector{}) continue;
        for (std::size_t c = 0; c < current.size(); ++c) {
          if (admits(table, current, current[c], k4, omega[c] + omega_grid[s], delta)) {
            fresh.push_back(k4);
            break;
          }
        }
      }
    } else {
      std::vector<char> queued(box.slots(), 0);
      const auto enqueue = [&](Wavevector l, std::size_t s) {
        if (!member[s] && !queued[s]) {
          queued[s] = 1;
          fresh.push_back(l);
        }
      };
      table.for_each_sum([&](Wavevector sum) {
        const auto pairs = table.pairs(sum);
        const std::int64_t x_lo = std::max(-k_max, sum.x - k_max);
        const std::int64_t x_hi = std::min(k_max, sum.x + k_max);
        const std::int64_t y_lo = std::max(-k_max, sum.y - k_max);
        const std::int64_t y_hi = std::min(k_max, sum.y + k_max);
        for (std::int64_t x = x_lo; x <= x_hi; ++x) {
          for (std::int64_t y = y_lo; y <= y_hi; ++y) {
            const Wavevector k3{x, y};
            const Wavevector k4 = sum - k3;
            if (k4 < k3 || k3 == Wavevector{} || k4 == Wavevector{}) continue;
            const std::size_t s3 = box.slot(k3);
            const std::size_t s4 = box.slot(k4);
            if ((member[s3] || queued[s3]) && (member[s4] || queued[s4])) continue;
            if (admits(pairs, current, k3, k4, omega_grid[s3] + omega_grid[s4], delta)) {
              enqueue(k3, s3);
              enqueue(k4, s4);
            }
          }
        }
      });
    }
    if (fresh.empty()) {
      result.verdict = SpreadVerdict::saturates;
      return result;
    }
    bool filled = false;
    for (Wavevector l : fresh) {
      member[box.slot(l)] = 1;
      filled = filled || box.near_boundary(l, options.boundary_distance);
    }
    current.insert(current.end(), fresh.begin(), fresh.end());
    std::sort(current.begin(), current.end());
    result.generations.push_back(current);
    if (filled) {
      result.verdict = SpreadVerdict::fills_grid;
      return result;
    }
  }
  result.verdict = SpreadVerdict::capped;
  return result;
}

DeltaCritResult find_delta_crit(std::span<const Wavevector> initial, std::int64_t k_max,
                                const DeltaCritOptions& options) {
  DeltaCritResult result;
  const auto evaluate = [&](double delta) {
    const GenerationSet g = quasi_generations(initial, delta, k_max, options.generations);
    result.history.push_back({delta, g.verdict, g.generations.size(), g.generations.back().size()});
    if (g.verdict == SpreadVerdict::capped) {
      throw BracketError("generation cap reached without a verdict at delta=" + std::to_string(delta), delta, delta);
    }
    return g.verdict;
  };

  double lo = options.delta_low;
  double hi = options.delta_high;
  if (evaluate(lo) != SpreadVerdict::saturates) {
    throw BracketError("lower bracket delta=" + std::to_string(lo) + " does not saturate", lo, hi);
  }
  if (evaluate(hi) != SpreadVerdict::fills_grid) {
    throw BracketError("upper bracket delta=" + std::to_string(hi) + " does not fill the grid", lo, hi);
  }
  while (hi / lo > 1.0 + options.relative_width) {
    const double mid = std::sqrt(lo * hi);
    if (evaluate(mid) == SpreadVerdict::saturates) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // Every saturating delta must lie below every filling one.
  for (const auto& a : result.history) {
    for (const auto& b : result.history) {
      if (a.delta < b.delta && a.verdict == SpreadVerdict::fills_grid && b.verdict == SpreadVerdict::saturates) {
        throw BracketError("non-monotone verdicts: delta=" + std::to_string(a.delta) + " fills, delta=" +
                               std::to_string(b.delta) + " saturates",
                           a.delta, b.delta);
      }
    }
  }
  result.delta_saturating = lo;
  result.delta_filling = hi;
  result.delta_crit = std::sqrt(lo * hi);
  return result;
}

}  // namespace gravwave
