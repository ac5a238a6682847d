#include "gravwave/frequency.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>

#include "gravwave/errors.hpp"

namespace gravwave {
namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// Log-parabolic refinement of a peak at bin i (exact for Gaussian lobes).
SpectralPeak refine(const Periodogram& p, std::size_t i) {
  SpectralPeak out{p.frequency[i], p.power[i]};
  if (i == 0 || i + 1 >= p.power.size()) return out;
  const double a = std::log(p.power[i - 1]);
  const double b = std::log(p.power[i]);
  const double c = std::log(p.power[i + 1]);
  const double denom = a - 2.0 * b + c;
  if (!(denom < 0.0) || !std::isfinite(a) || !std::isfinite(c)) return out;
  const double shift = 0.5 * (a - c) / denom;
  out.frequency += shift * p.resolution();
  out.power = std::exp(b - 0.25 * (a - c) * shift);
  return out;
}

}  // namespace

Periodogram welch_periodogram(std::span<const Complex> samples, double dt, const WelchOptions& options) {
  const std::size_t n = options.window;
  if (n < 4) throw ConfigError("welch.window", 0, "window must be at least 4 samples");
  if (!(options.overlap >= 0.0 && options.overlap < 1.0)) {
    throw ConfigError("welch.overlap", 0, "overlap must lie in [0, 1)");
  }
  if (samples.size() < n) {
    throw AnalysisError("welch_periodogram: " + std::to_string(samples.size()) + " samples, window is " +
                        std::to_string(n));
  }
  const auto hop = std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(n * (1.0 - options.overlap))));

  std::vector<double> taper(n);
  double taper_power = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    taper[j] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n));
    taper_power += taper[j] * taper[j];
  }

  auto* buf = fftw_alloc_complex(n);
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
  }
  std::vector<double> acc(n, 0.0);
  std::size_t segments = 0;
  for (std::size_t start = 0; start + n <= samples.size(); start += hop) {
    for (std::size_t j = 0; j < n; ++j) {
      buf[j][0] = taper[j] * samples[start + j].real();
      buf[j][1] = taper[j] * samples[start + j].imag();
    }
    fftw_execute(plan);
    for (std::size_t m = 0; m < n; ++m) acc[m] += buf[m][0] * buf[m][0] + buf[m][1] * buf[m][1];
    ++segments;
  }
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  fftw_free(buf);

  // DFT bin m responds to exp(-i nu t) with nu = -2 pi f_m / dt.
  Periodogram out;
  out.segments = segments;
  out.frequency.resize(n);
  out.power.resize(n);
  const double scale = 1.0 / (static_cast<double>(segments) * taper_power);
  const double dnu = 2.0 * std::numbers::pi / (static_cast<double>(n) * dt);
  const auto half = static_cast<std::int64_t>(n / 2);
  for (std::size_t r = 0; r < n; ++r) {
    const std::int64_t nu_index = static_cast<std::int64_t>(r) - half;
    const auto m = static_cast<std::size_t>(((-nu_index) % static_cast<std::int64_t>(n) + static_cast<std::int64_t>(n)) %
                                            static_cast<std::int64_t>(n));
    out.frequency[r] = static_cast<double>(nu_index) * dnu;
    out.power[r] = acc[m] * scale;
  }
  return out;
}

PeakReport frequency_peaks(std::span<const Complex> samples, double dt, double omega_linear,
                           const PeakOptions& options) {
  const Periodogram p = welch_periodogram(samples, dt, options.welch);
  PeakReport report;
  report.omega_linear = omega_linear;

  std::vector<std::size_t> maxima;
  for (std::size_t i = 1; i + 1 < p.power.size(); ++i) {
    if (p.power[i] > p.power[i - 1] && p.power[i] >= p.power[i + 1]) maxima.push_back(i);
  }
  std::sort(maxima.begin(), maxima.end(), [&](std::size_t a, std::size_t b) { return p.power[a] > p.power[b]; });
  for (std::size_t i : maxima) report.peaks.push_back(refine(p, i));

  const double w = omega_linear;
  const auto main_it = std::find_if(maxima.begin(), maxima.end(), [&](std::size_t i) {
    return std::abs(p.frequency[i] - w) <= options.main_band * w;
  });
  if (main_it == maxima.end()) throw AnalysisError("frequency_peaks: no peak near the linear frequency");
  const std::size_t main_bin = *main_it;
  report.main = refine(p, main_bin);

  std::vector<double> positive;
  for (std::size_t i = 0; i < p.power.size(); ++i) {
    if (p.frequency[i] > 0.0) positive.push_back(p.power[i]);
  }
  std::nth_element(positive.begin(), positive.begin() + static_cast<std::ptrdiff_t>(positive.size() / 2),
                   positive.end());
  const double floor = options.noise_factor * positive[positive.size() / 2];

  const auto strongest = [&](auto&& accept) -> std::optional<SpectralPeak> {
    for (std::size_t i : maxima) {
      if (accept(p.frequency[i]) && p.power[i] > floor) return refine(p, i);
    }
    return std::nullopt;
  };
  report.secondary = strongest([&](double nu) { return nu > w * (1.0 + options.separation); });
  report.sub_linear = strongest([&](double nu) { return nu > 0.0 && nu < w * (1.0 - options.separation); });
  if (report.secondary) {
    const double r = report.secondary->frequency / report.main.frequency;
    report.squared_ratio = r * r;
    report.power_ratio = report.secondary->power / report.main.power;
  }

  for (std::size_t i = 0; i < p.power.size(); ++i) {
    const std::size_t distance = i > main_bin ? i - main_bin : main_bin - i;
    if (distance <= options.main_exclusion_bins) continue;
    (p.frequency[i] < w ? report.power_below : report.power_above) += p.power[i];
  }
  return report;
}

PeakReport frequency_peaks(const ModeProbe& probe, const PeakOptions& options) {
  const auto lab = probe.lab();
  return frequency_peaks(lab, probe.sample_interval, probe.omega, options);
}

}  // namespace gravwave
