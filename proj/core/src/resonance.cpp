#include "gravwave/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "gravwave/radicals.hpp"

namespace gravwave {
namespace {

constexpr std::array<int, 4> kSigns{1, 1, -1, -1};

std::array<BigInt, 4> squared_norms(const Quartet& q) {
  const auto n2 = [](Wavevector l) { return BigInt(l.x) * l.x + BigInt(l.y) * l.y; };
  return {n2(q.k), n2(q.k1), n2(q.k2), n2(q.k3)};
}

long bits_for_digits(int decimal_digits) {
  return static_cast<long>(std::ceil(decimal_digits * 3.3219280948873623)) + 1;
}

std::int64_t cross(Wavevector a, Wavevector b) { return a.x * b.y - a.y * b.x; }
std::int64_t dot(Wavevector a, Wavevector b) { return a.x * b.x + a.y * b.y; }

bool all_collinear(const Quartet& q) {
  const std::array<Wavevector, 4> v{q.k, q.k1, q.k2, q.k3};
  const auto dir = std::find_if(v.begin(), v.end(), [](Wavevector l) { return l != Wavevector{}; });
  if (dir == v.end()) return true;
  return std::all_of(v.begin(), v.end(), [&](Wavevector l) { return cross(*dir, l) == 0; });
}

// p and q parallel through the origin, r and s mirror images across that line.
bool trident_shape(Wavevector p, Wavevector q, Wavevector r, Wavevector s) {
  if (p == Wavevector{} || cross(p, q) != 0) return false;
  const std::int64_t pp = dot(p, p);
  const Wavevector reflected = p * (2 * dot(r, p)) - r * pp;
  return reflected == s * pp && r != s;
}

Wavevector apply_symmetry(int g, Wavevector l) {
  switch (g) {
    case 0: return {l.x, l.y};
    case 1: return {-l.y, l.x};
    case 2: return {-l.x, -l.y};
    case 3: return {l.y, -l.x};
    case 4: return {l.y, l.x};
    case 5: return {-l.x, l.y};
    case 6: return {l.x, -l.y};
    default: return {-l.y, -l.x};
  }
}

struct PairEntry {
  double omega;
  std::uint32_t i;
  std::uint32_t j;
};

}  // namespace

std::string_view to_string(ResonanceVerdict v) {
  switch (v) {
    case ResonanceVerdict::exact: return "exact";
    case ResonanceVerdict::not_exact: return "not-exact";
    default: return "undecided";
  }
}

std::string_view to_string(ResonanceClass c) {
  switch (c) {
    case ResonanceClass::exact: return "exact";
    case ResonanceClass::quasi: return "quasi";
    default: return "non-resonant";
  }
}

std::string_view to_string(QuartetFamily f) {
  switch (f) {
    case QuartetFamily::trivial: return "trivial";
    case QuartetFamily::symmetric: return "symmetric";
    case QuartetFamily::collinear: return "collinear";
    case QuartetFamily::trident: return "trident";
    default: return "other";
  }
}

double lattice_frequency(Wavevector l) { return std::sqrt(std::sqrt(static_cast<double>(l.norm2()))); }

double detuning(Wavevector k, Wavevector k1, Wavevector k2, Wavevector k3) {
  return std::abs(lattice_frequency(k) + lattice_frequency(k1) - lattice_frequency(k2) - lattice_frequency(k3));
}

ResonanceVerdict is_exact_resonance(const Quartet& q) {
  if (!q.momentum_conserved()) return ResonanceVerdict::not_exact;
  const auto m = squared_norms(q);
  const bool algebraic_zero = fourth_root_sum_is_zero(m, kSigns);
  const long floor_bits = bits_for_digits(200);
  if (algebraic_zero) {
    const auto enclosure = fourth_root_sum_interval(m, kSigns, floor_bits);
    return enclosure.excludes_zero() ? ResonanceVerdict::undecided : ResonanceVerdict::exact;
  }
  const auto enclosure = refine_fourth_root_sum(m, kSigns, floor_bits);
  return enclosure.excludes_zero() ? ResonanceVerdict::not_exact : ResonanceVerdict::undecided;
}

ResonanceVerdict is_exact_resonance(Wavevector k, Wavevector k1, Wavevector k2, Wavevector k3) {
  Quartet q;
  q.k = k;
  q.k1 = k1;
  q.k2 = k2;
  q.k3 = k3;
  return is_exact_resonance(q);
}

double certified_detuning_width(const Quartet& q, int decimal_digits) {
  return fourth_root_sum_width(squared_norms(q), kSigns, bits_for_digits(decimal_digits));
}

bool certified_zero_detuning(const Quartet& q, int decimal_digits) {
  return !fourth_root_sum_interval(squared_norms(q), kSigns, bits_for_digits(decimal_digits)).excludes_zero();
}

QuartetFamily classify_family(const Quartet& q) {
  if ((q.k == q.k2 && q.k1 == q.k3) || (q.k == q.k3 && q.k1 == q.k2)) return QuartetFamily::trivial;
  const auto n = [](Wavevector l) { return l.norm2(); };
  if ((n(q.k) == n(q.k2) && n(q.k1) == n(q.k3)) || (n(q.k) == n(q.k3) && n(q.k1) == n(q.k2))) {
    return QuartetFamily::symmetric;
  }
  if (all_collinear(q)) return QuartetFamily::collinear;
  if (trident_shape(q.k, q.k1, q.k2, q.k3) || trident_shape(q.k1, q.k, q.k2, q.k3) ||
      trident_shape(q.k2, q.k3, q.k, q.k1) || trident_shape(q.k3, q.k2, q.k, q.k1)) {
    return QuartetFamily::trident;
  }
  return QuartetFamily::other;
}

Quartet canonical(const Quartet& q) {
  Quartet out = q;
  if (out.k1 < out.k) std::swap(out.k, out.k1);
  if (out.k3 < out.k2) std::swap(out.k2, out.k3);
  if (std::pair(out.k2, out.k3) < std::pair(out.k, out.k1)) {
    std::swap(out.k, out.k2);
    std::swap(out.k1, out.k3);
  }
  return out;
}

bool same_quartet(const Quartet& a, const Quartet& b) {
  const Quartet ca = canonical(a);
  const Quartet cb = canonical(b);
  return ca.k == cb.k && ca.k1 == cb.k1 && ca.k2 == cb.k2 && ca.k3 == cb.k3;
}

Quartet make_quartet(Wavevector k, Wavevector k1, Wavevector k2, Wavevector k3) {
  Quartet q;
  q.k = k;
  q.k1 = k1;
  q.k2 = k2;
  q.k3 = k3;
  q.detuning = detuning(k, k1, k2, k3);
  q.classification =
      is_exact_resonance(q) == ResonanceVerdict::exact ? ResonanceClass::exact : ResonanceClass::non_resonant;
  q.family = classify_family(q);
  return q;
}

std::vector<Quartet> tridents(int s_max, int t_max, std::int64_t k_max) {
  std::vector<Quartet> out;
  for (std::int64_t s = 2; s <= s_max; ++s) {
    for (std::int64_t t = 1; t < s && t <= t_max; ++t) {
      const std::int64_t s2 = s * s;
      const std::int64_t t2 = t * t;
      const std::int64_t a = (s2 + t2 + s * t) * (s2 + t2 + s * t);
      const std::int64_t b = (s2 + t2 - s * t) * (s2 + t2 - s * t);
      const std::int64_t c = 2 * s * t * (s2 + t2);
      const std::int64_t d = s2 * s2 - t2 * t2;
      const std::int64_t extent = std::max({a, b, c, d});
      const std::int64_t scale_max = k_max > 0 ? k_max / extent : 1;
      for (std::int64_t lambda = 1; lambda <= scale_max; ++lambda) {
        Quartet q = make_quartet({lambda * a, 0}, {-lambda * b, 0}, {lambda * c, lambda * d}, {lambda * c, -lambda * d});
        if (q.classification == ResonanceClass::exact) out.push_back(q);
      }
    }
  }
  return out;
}

std::vector<CollinearCandidate> collinear_candidates(int m_max, int n_max) {
  std::vector<CollinearCandidate> out;
  for (std::int64_t m = 1; m <= m_max; ++m) {
    for (std::int64_t n = 1; n <= n_max; ++n) {
      CollinearCandidate cand;
      cand.m = static_cast<int>(m);
      cand.n = static_cast<int>(n);
      const std::int64_t mn = m + n;
      const std::int64_t a = m * m * mn * mn;
      const std::int64_t b = n * n * mn * mn;
      const std::int64_t c = -m * m * n * n;
      const std::int64_t d = mn * mn * mn * mn + m * m * n * n;
      cand.values = {a, b, c, d};
      const std::array<std::array<std::int64_t, 4>, 3> pairings{{{a, b, c, d}, {a, c, b, d}, {a, d, b, c}}};
      for (int p = 0; p < 3; ++p) {
        const auto& v = pairings[p];
        Quartet q = make_quartet({v[0], 0}, {v[1], 0}, {v[2], 0}, {v[3], 0});
        if (p == 0) cand.quartet = q;
        if (q.classification == ResonanceClass::exact) {
          cand.quartet = q;
          cand.verified_pairing = p;
          break;
        }
      }
      out.push_back(cand);
    }
  }
  return out;
}

std::vector<Quartet> brute_force_exact(std::int64_t k_max, double tolerance, const BruteForceOptions& options) {
  std::vector<Quartet> out;
  if (k_max <= 0) return out;

  std::vector<Wavevector> points;
  for (std::int64_t x = -k_max; x <= k_max; ++x) {
    for (std::int64_t y = options.axis_only ? 0 : -k_max; y <= (options.axis_only ? 0 : k_max); ++y) {
      if (x != 0 || y != 0) points.push_back({x, y});
    }
  }
  const std::int64_t side = 2 * k_max + 1;
  std::vector<std::int32_t> slot(static_cast<std::size_t>(side * side), -1);
  const auto slot_of = [&](Wavevector l) {
    return static_cast<std::size_t>((l.x + k_max) * side + (l.y + k_max));
  };
  std::vector<double> omega(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    slot[slot_of(points[i])] = static_cast<std::int32_t>(i);
    omega[i] = lattice_frequency(points[i]);
  }
  const auto inside = [&](Wavevector l) {
    return std::abs(l.x) <= k_max && std::abs(l.y) <= k_max && slot[slot_of(l)] >= 0;
  };

  std::vector<PairEntry> bucket;
  std::vector<Quartet> found;
  const auto scan = [&](Wavevector sum) {
    bucket.clear();
    for (std::size_t i = 0; i < points.size(); ++i) {
      const Wavevector partner = sum - points[i];
      if (!inside(partner)) continue;
      const auto j = static_cast<std::size_t>(slot[slot_of(partner)]);
      if (j < i) continue;
      bucket.push_back({omega[i] + omega[j], static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
    }
    std::sort(bucket.begin(), bucket.end(), [](const PairEntry& a, const PairEntry& b) { return a.omega < b.omega; });
    found.clear();
    for (std::size_t p = 0; p < bucket.size(); ++p) {
      if (options.include_trivial) {
        const Wavevector u = points[bucket[p].i];
        const Wavevector v = points[bucket[p].j];
        found.push_back(make_quartet(u, v, u, v));
      }
      for (std::size_t q = p + 1; q < bucket.size() && bucket[q].omega - bucket[p].omega <= tolerance; ++q) {
        const Wavevector k = points[bucket[p].i];
        const Wavevector k1 = points[bucket[p].j];
        const Wavevector k2 = points[bucket[q].i];
        const Wavevector k3 = points[bucket[q].j];
        if (options.confirm) {
          Quartet cand = make_quartet(k, k1, k2, k3);
          if (cand.classification == ResonanceClass::exact) found.push_back(cand);
        } else {
          Quartet cand;
          cand.k = k;
          cand.k1 = k1;
          cand.k2 = k2;
          cand.k3 = k3;
          cand.detuning = detuning(k, k1, k2, k3);
          cand.family = classify_family(cand);
          found.push_back(cand);
        }
      }
    }
  };

  if (options.axis_only) {
    for (std::int64_t p = -2 * k_max; p <= 2 * k_max; ++p) {
      scan({p, 0});
      out.insert(out.end(), found.begin(), found.end());
    }
    return out;
  }

  // One representative per orbit: 0 <= P.y <= P.x.
  for (std::int64_t px = 0; px <= 2 * k_max; ++px) {
    for (std::int64_t py = 0; py <= px; ++py) {
      const Wavevector sum{px, py};
      scan(sum);
      std::vector<Wavevector> images;
      for (int g = 0; g < 8; ++g) {
        const Wavevector image = apply_symmetry(g, sum);
        if (std::find(images.begin(), images.end(), image) != images.end()) continue;
        images.push_back(image);
        for (const Quartet& q : found) {
          Quartet mapped = q;
          mapped.k = apply_symmetry(g, q.k);
          mapped.k1 = apply_symmetry(g, q.k1);
          mapped.k2 = apply_symmetry(g, q.k2);
          mapped.k3 = apply_symmetry(g, q.k3);
          out.push_back(mapped);
        }
      }
    }
  }
  return out;
}

}  // namespace gravwave
