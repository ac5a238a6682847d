#include "gravwave/amplitude_statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gravwave/errors.hpp"

namespace gravwave {

double ExponentialFit::density(double s) const { return std::exp(log_amplitude - s / n_fit); }

double ExponentialFit::tail_mass(double s) const { return n_fit * density(s); }

double AmplitudeHistogram::density(std::size_t bin) const {
  const double width = edges[bin + 1] - edges[bin];
  return samples == 0 ? 0.0 : static_cast<double>(counts[bin]) / (static_cast<double>(samples) * width);
}

AmplitudeHistogram amplitude_pdf(std::span<const double> s, const HistogramOptions& options, Ring ring) {
  if (s.size() < options.min_samples) {
    throw AnalysisError("amplitude_pdf: " + std::to_string(s.size()) + " samples, need " +
                        std::to_string(options.min_samples));
  }
  AmplitudeHistogram h;
  h.ring = ring;
  h.samples = s.size();
  h.n = std::accumulate(s.begin(), s.end(), 0.0) / static_cast<double>(s.size());
  if (!(h.n > 0.0)) throw AnalysisError("amplitude_pdf: mean of s is not positive");
  const double s_max = std::max(*std::max_element(s.begin(), s.end()), 2.0 * h.n);

  for (std::size_t i = 0; i < options.linear_bins; ++i) {
    h.edges.push_back(h.n * static_cast<double>(i) / static_cast<double>(options.linear_bins));
  }
  const double log_span = std::log(s_max / h.n);
  for (std::size_t i = 0; i <= options.log_bins; ++i) {
    h.edges.push_back(h.n * std::exp(log_span * static_cast<double>(i) / static_cast<double>(options.log_bins)));
  }
  h.edges.back() = std::nextafter(s_max, INFINITY);
  h.counts.assign(h.edges.size() - 1, 0);
  for (double v : s) {
    const auto it = std::upper_bound(h.edges.begin(), h.edges.end(), v);
    const auto bin = static_cast<std::size_t>(std::distance(h.edges.begin(), it)) - 1;
    ++h.counts[std::min(bin, h.counts.size() - 1)];
  }

  // Weighted least squares of log density against s over the core.
  double sw = 0.0, sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t b = 0; b < h.counts.size(); ++b) {
    if (h.edges[b + 1] > options.core_limit * h.n || h.counts[b] == 0) continue;
    const double w = static_cast<double>(h.counts[b]);
    const double x = h.bin_center(b);
    const double y = std::log(h.density(b));
    sw += w;
    sx += w * x;
    sy += w * y;
    sxx += w * x * x;
    sxy += w * x * y;
  }
  const double denom = sw * sxx - sx * sx;
  if (!(denom > 0.0)) throw AnalysisError("amplitude_pdf: exponential core fit is degenerate");
  const double slope = (sw * sxy - sx * sy) / denom;
  if (!(slope < 0.0)) throw AnalysisError("amplitude_pdf: core does not decay");
  h.core.n_fit = -1.0 / slope;
  h.core.log_amplitude = (sy - slope * sx) / sw;

  std::vector<double> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  for (double theta : options.tail_thresholds) {
    const double cut = theta * h.n;
    const auto above = static_cast<double>(sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), cut));
    h.tails.push_back({theta, above / static_cast<double>(s.size()), h.core.tail_mass(cut)});
  }
  return h;
}

std::vector<double> moment_ratios(std::span<const double> s, int p_max, std::size_t min_samples) {
  if (s.size() < min_samples) {
    throw AnalysisError("moment_ratios: " + std::to_string(s.size()) + " samples, need " +
                        std::to_string(min_samples));
  }
  const double count = static_cast<double>(s.size());
  const double n = std::accumulate(s.begin(), s.end(), 0.0) / count;
  if (!(n > 0.0)) throw AnalysisError("moment_ratios: mean of s is not positive");
  std::vector<double> out;
  double factorial = 1.0;
  for (int p = 1; p <= p_max; ++p) {
    factorial *= p;
    double m = 0.0;
    for (double v : s) m += std::pow(v / n, p);
    out.push_back(m / count / factorial);
  }
  out[0] = 1.0;
  return out;
}

std::vector<double> ring_samples(std::span<const ModeProbe> probes, Ring ring, bool normalize) {
  std::vector<double> out;
  for (const auto& probe : probes) {
    if (!ring.contains(probe.k) || probe.samples.empty()) continue;
    const std::size_t first = out.size();
    double sum = 0.0;
    for (Complex a : probe.samples) {
      out.push_back(std::norm(a));
      sum += out.back();
    }
    if (normalize && sum > 0.0) {
      const double mean = sum / static_cast<double>(probe.samples.size());
      for (std::size_t i = first; i < out.size(); ++i) out[i] /= mean;
    }
  }
  return out;
}

}  // namespace gravwave
