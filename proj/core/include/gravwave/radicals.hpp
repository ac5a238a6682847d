#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstdint>

namespace gravwave {

using BigInt = boost::multiprecision::cpp_int;

/// m = coefficient^4 * radicand with radicand fourth-power-free, so that
/// m^{1/4} = coefficient * radicand^{1/4}.
struct FourthRootForm {
  BigInt coefficient;
  BigInt radicand;
};

/// Exact decomposition by trial division up to m^{1/4}. m must be >= 0;
/// m = 0 yields coefficient 0.
FourthRootForm fourth_root_form(const BigInt& m);

bool is_perfect_square(const BigInt& m);

/// Exact sign of sum_i sign_i * m_i^{1/4}, decided by cancelling coefficients
/// within each radical class. Fourth roots of distinct fourth-power-free
/// integers are linearly independent over the rationals, so the sum vanishes
/// iff every class cancels.
bool fourth_root_sum_is_zero(const std::array<BigInt, 4>& m, const std::array<int, 4>& signs);

/// Outward-rounded enclosure of sum_i sign_i * m_i^{1/4}.
struct CertifiedInterval {
  double lower = 0.0;
  double upper = 0.0;
  long precision_bits = 0;
  bool excludes_zero() const noexcept { return lower > 0.0 || upper < 0.0; }
};

/// Evaluates with MPFR directed rounding at `bits` of precision.
CertifiedInterval fourth_root_sum_interval(const std::array<BigInt, 4>& m, const std::array<int, 4>& signs, long bits);

/// Doubles the precision from 64 bits until the enclosure excludes zero or
/// the floor (default: 200 decimal digits) is reached; returns the last enclosure.
CertifiedInterval refine_fourth_root_sum(const std::array<BigInt, 4>& m, const std::array<int, 4>& signs,
                                         long floor_bits = 665);

/// Width of the enclosure at `bits`, computed in MPFR and returned as a double
/// upper bound (used to check zero-detuning claims at high precision).
double fourth_root_sum_width(const std::array<BigInt, 4>& m, const std::array<int, 4>& signs, long bits);

}  // namespace gravwave
