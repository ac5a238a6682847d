#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "gravwave/grid.hpp"

namespace gravwave {

enum class ResonanceVerdict { exact, not_exact, undecided };
enum class ResonanceClass { exact, quasi, non_resonant };
/// trivial: {k, k1} = {k2, k3} as vectors. symmetric: {|k|, |k1|} = {|k2|, |k3|}
/// without being trivial. Earlier labels take precedence.
enum class QuartetFamily { trivial, symmetric, collinear, trident, other };

std::string_view to_string(ResonanceVerdict v);
std::string_view to_string(ResonanceClass c);
std::string_view to_string(QuartetFamily f);

/// Four integer wavevectors with k + k1 = k2 + k3; frequencies use g = 1 and
/// L = 2*pi, so omega = (x^2 + y^2)^{1/4}.
struct Quartet {
  Wavevector k;
  Wavevector k1;
  Wavevector k2;
  Wavevector k3;
  double detuning = 0.0;
  ResonanceClass classification = ResonanceClass::non_resonant;
  /// Broadening bound for quasi quartets.
  double delta = 0.0;
  QuartetFamily family = QuartetFamily::other;

  bool momentum_conserved() const noexcept { return k + k1 == k2 + k3; }
  /// The interaction coefficient vanishes on non-trivial collinear quartets.
  bool zero_coupling() const noexcept { return family == QuartetFamily::collinear; }
};

double lattice_frequency(Wavevector l);
double detuning(Wavevector k, Wavevector k1, Wavevector k2, Wavevector k3);

/// Momentum check in integer arithmetic plus an exact radical-class decision
/// on the frequency condition, cross-checked by a certified MPFR enclosure.
/// A quartet is never reported exact unless both agree; if the enclosure
/// cannot exclude zero at the 200-digit floor while the algebra says
/// otherwise, the verdict is undecided.
ResonanceVerdict is_exact_resonance(Wavevector k, Wavevector k1, Wavevector k2, Wavevector k3);
ResonanceVerdict is_exact_resonance(const Quartet& q);

/// Width of the MPFR enclosure of the detuning at `decimal_digits`.
double certified_detuning_width(const Quartet& q, int decimal_digits = 200);
/// True when the enclosure at `decimal_digits` contains zero.
bool certified_zero_detuning(const Quartet& q, int decimal_digits = 200);

QuartetFamily classify_family(const Quartet& q);

/// Orders each side and the two sides so that equal quartets compare equal.
Quartet canonical(const Quartet& q);
bool same_quartet(const Quartet& a, const Quartet& b);

/// Fills detuning, classification (exact or non-resonant) and family.
Quartet make_quartet(Wavevector k, Wavevector k1, Wavevector k2, Wavevector k3);

/// k = (a,0), k1 = (-b,0), k2 = (c,d), k3 = (c,-d) with a = (s^2+t^2+st)^2,
/// b = (s^2+t^2-st)^2, c = 2st(s^2+t^2), d = s^4-t^4 for s > t >= 1.
/// With k_max > 0 every integer multiple with all components within
/// [-k_max, k_max] is emitted; with k_max = 0 only the base quartets.
std::vector<Quartet> tridents(int s_max, int t_max, std::int64_t k_max = 0);

struct CollinearCandidate {
  int m = 0;
  int n = 0;
  /// a = m^2(m+n)^2, b = n^2(m+n)^2, c = -m^2 n^2, d = (m+n)^4 + m^2 n^2.
  std::array<std::int64_t, 4> values{};
  /// Quartet on the x-axis in the verified pairing, or in {a,b | c,d} order
  /// when no pairing verifies.
  Quartet quartet;
  /// 0: {a,b|c,d}, 1: {a,c|b,d}, 2: {a,d|b,c}.
  std::optional<int> verified_pairing;
};

std::vector<CollinearCandidate> collinear_candidates(int m_max, int n_max);

struct BruteForceOptions {
  /// Restrict every wavevector to the x-axis.
  bool axis_only = false;
  /// Also emit trivial pair-exchange solutions {k,k1} = {k2,k3}.
  bool include_trivial = false;
  /// Confirm each candidate with is_exact_resonance; when false the raw
  /// floating-point filter result is returned.
  bool confirm = true;
};

/// Exhaustive search over quartets with all wavevectors in [-k_max, k_max]^2
/// excluding the origin. Pairs are bucketed by their sum P = k + k1, so each
/// bucket is scanned once for pairs with matching frequency sums. Buckets are
/// visited for one representative P per orbit of the square's symmetry group
/// and the results mapped onto the rest of the orbit.
std::vector<Quartet> brute_force_exact(std::int64_t k_max, double tolerance = 1e-9,
                                       const BruteForceOptions& options = {});

}  // namespace gravwave
