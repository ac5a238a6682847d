#include "gravwave/phase.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gravwave/correlation.hpp"

namespace gravwave {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

UnwrappedPhase unwrap_phase(std::span<const double> wrapped) {
  UnwrappedPhase out;
  if (wrapped.empty()) return out;
  out.phi.resize(wrapped.size());
  out.phi[0] = wrapped[0];
  for (std::size_t j = 1; j < wrapped.size(); ++j) {
    const double d = wrapped[j] - wrapped[j - 1];
    double r = std::remainder(d, kTwoPi);
    if (std::abs(r) == std::numbers::pi) {
      r = std::copysign(std::numbers::pi, d);
      out.ties.push_back(j);
    }
    out.phi[j] = out.phi[j - 1] + r;
  }
  return out;
}

UnwrappedPhase unwrap_phase(std::span<const Complex> samples) {
  std::vector<double> wrapped(samples.size());
  std::transform(samples.begin(), samples.end(), wrapped.begin(), [](Complex z) { return std::arg(z); });
  return unwrap_phase(wrapped);
}

std::size_t default_run_window(double omega, double sample_interval) {
  const double samples = 5.0 * kTwoPi / (omega * sample_interval);
  return std::max<std::size_t>(2, static_cast<std::size_t>(std::lround(samples)));
}

std::vector<PhaseRun> detect_phase_runs(std::span<const double> phi, double t0, double dt,
                                        const RunDetectorOptions& options, Wavevector wavevector) {
  std::vector<PhaseRun> runs;
  const std::size_t w = options.window;
  if (w == 0 || phi.size() < w + 1) return runs;

  const std::size_t n_inc = phi.size() - 1;
  std::vector<std::size_t> up(n_inc + 1, 0);
  std::vector<std::size_t> down(n_inc + 1, 0);
  for (std::size_t j = 0; j < n_inc; ++j) {
    const double d = phi[j + 1] - phi[j];
    up[j + 1] = up[j] + (d > 0.0 ? 1 : 0);
    down[j + 1] = down[j] + (d < 0.0 ? 1 : 0);
  }

  const auto emit = [&](std::size_t first, std::size_t last, RunDirection dir) {
    const auto along = [&](std::size_t j) {
      const double d = phi[j + 1] - phi[j];
      return dir == RunDirection::up ? d > 0.0 : d < 0.0;
    };
    while (first < last && !along(first)) ++first;
    while (last > first && !along(last - 1)) --last;
    if (last <= first) return;
    // span the net excursion: from the extreme before the run to the opposite extreme
    const double sign = dir == RunDirection::up ? 1.0 : -1.0;
    std::size_t lo = first;
    for (std::size_t j = first; j <= last; ++j) {
      if (sign * phi[j] < sign * phi[lo]) lo = j;
    }
    std::size_t hi = lo;
    for (std::size_t j = lo; j <= last; ++j) {
      if (sign * phi[j] > sign * phi[hi]) hi = j;
    }
    first = lo;
    last = hi;
    if (last <= first) return;
    PhaseRun run;
    run.wavevector = wavevector;
    run.first_sample = first;
    run.last_sample = last;
    run.start = t0 + dt * static_cast<double>(first);
    run.end = t0 + dt * static_cast<double>(last);
    run.direction = dir;
    run.total_change = phi[last] - phi[first];
    run.mean_rate = run.total_change / (run.end - run.start);
    runs.push_back(run);
  };

  bool open = false;
  std::size_t first = 0;
  std::size_t last = 0;
  RunDirection dir = RunDirection::up;
  for (std::size_t i = 0; i + w <= n_inc; ++i) {
    const double change = phi[i + w] - phi[i];
    bool qualifies = std::abs(change) > options.threshold;
    const RunDirection d = change > 0.0 ? RunDirection::up : RunDirection::down;
    if (qualifies) {
      const std::size_t along = d == RunDirection::up ? up[i + w] - up[i] : down[i + w] - down[i];
      qualifies = static_cast<double>(along) >= options.min_monotonicity * static_cast<double>(w);
    }
    if (!qualifies) continue;
    if (open && d == dir && i <= last) {
      last = i + w;
      continue;
    }
    if (open) emit(first, last, dir);
    open = true;
    first = i;
    last = i + w;
    dir = d;
  }
  if (open) emit(first, last, dir);
  return runs;
}

std::vector<PhaseRun> detect_phase_runs(const ModeProbe& probe, RunDetectorOptions options) {
  if (options.window == 0) options.window = default_run_window(probe.omega, probe.sample_interval);
  const auto a = probe.interaction();
  const auto phi = unwrap_phase(a);
  return detect_phase_runs(phi.phi, probe.t0, probe.sample_interval, options, probe.wavevector);
}

std::vector<RunRateRow> run_rate_vs_peak(std::span<const ModeProbe> probes, std::span<const std::vector<PhaseRun>> runs,
                                         std::span<const PeakReport> peaks) {
  std::vector<RunRateRow> rows;
  const std::size_t n = std::min({probes.size(), runs.size(), peaks.size()});
  for (std::size_t i = 0; i < n; ++i) {
    if (runs[i].empty()) continue;
    RunRateRow row;
    row.wavevector = probes[i].wavevector;
    row.k = probes[i].k;
    const auto mean_rate = [&](RunDirection dir) -> std::optional<double> {
      double change = 0.0;
      double duration = 0.0;
      for (const auto& r : runs[i]) {
        if (r.direction != dir) continue;
        change += std::abs(r.total_change);
        duration += r.end - r.start;
      }
      if (duration <= 0.0) return std::nullopt;
      return change / duration;
    };
    row.superlinear_rate = mean_rate(RunDirection::down);
    row.sublinear_rate = mean_rate(RunDirection::up);
    const double w = peaks[i].omega_linear;
    if (peaks[i].secondary) row.superlinear_offset = peaks[i].secondary->frequency - w;
    if (peaks[i].sub_linear) row.sublinear_offset = w - peaks[i].sub_linear->frequency;
    rows.push_back(row);
  }
  return rows;
}

std::optional<double> lagged_correlation(std::span<const double> x, std::span<const double> y, int lag) {
  const auto n = static_cast<std::ptrdiff_t>(std::min(x.size(), y.size()));
  const std::ptrdiff_t shift = lag;
  const std::ptrdiff_t begin = std::max<std::ptrdiff_t>(0, -shift);
  const std::ptrdiff_t end = std::min<std::ptrdiff_t>(n, n - shift);
  if (end - begin < 2) return std::nullopt;
  return correlation(x.subspan(static_cast<std::size_t>(begin), static_cast<std::size_t>(end - begin)),
                     y.subspan(static_cast<std::size_t>(begin + shift), static_cast<std::size_t>(end - begin)));
}

AvalancheSeries avalanche_series(std::span<const RunEvents> events, const AvalancheOptions& options) {
  AvalancheSeries out;
  double t_end = options.t_end;
  if (t_end <= options.t_begin) {
    for (const auto& e : events) {
      for (const auto& r : e.runs) t_end = std::max(t_end, r.end);
    }
  }
  if (!(options.bin_width > 0.0) || t_end <= options.t_begin) return out;
  const auto bins = static_cast<std::size_t>(std::ceil((t_end - options.t_begin) / options.bin_width));
  for (std::size_t b = 0; b < bins; ++b) out.time.push_back(options.t_begin + options.bin_width * static_cast<double>(b));

  const auto percent = [&](Ring ring) {
    std::vector<double> active(bins, 0.0);
    std::size_t modes = 0;
    for (const auto& e : events) {
      if (!ring.contains_open(e.k)) continue;
      ++modes;
      std::vector<char> hit(bins, 0);
      for (const auto& r : e.runs) {
        const double lo = (r.start - options.t_begin) / options.bin_width;
        const double hi = (r.end - options.t_begin) / options.bin_width;
        if (hi < 0.0 || lo >= static_cast<double>(bins)) continue;
        const auto b0 = static_cast<std::size_t>(std::max(0.0, std::floor(lo)));
        const auto b1 = std::min(bins - 1, static_cast<std::size_t>(std::floor(hi)));
        for (std::size_t b = b0; b <= b1; ++b) hit[b] = 1;
      }
      for (std::size_t b = 0; b < bins; ++b) active[b] += hit[b];
    }
    if (modes > 0) {
      for (double& v : active) v *= 100.0 / static_cast<double>(modes);
    }
    return active;
  };
  out.low_percent = percent(options.low);
  out.high_percent = percent(options.high);

  bool any = false;
  for (int lag = -options.max_lag_bins; lag <= options.max_lag_bins; ++lag) {
    const auto c = lagged_correlation(out.low_percent, out.high_percent, lag);
    if (!c) continue;
    out.lags.push_back(lag);
    out.correlation.push_back(*c);
    const bool better = !any || *c > out.best_correlation ||
                        (*c == out.best_correlation && std::abs(lag) < std::abs(out.best_lag_bins));
    if (better) {
      any = true;
      out.best_correlation = *c;
      out.best_lag_bins = lag;
    }
  }
  out.best_lag_time = out.best_lag_bins * options.bin_width;
  return out;
}

}  // namespace gravwave
