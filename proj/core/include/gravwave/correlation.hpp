#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gravwave/spectral_field.hpp"

namespace gravwave {

/// (<XY> - <X><Y>) / (sigma_X sigma_Y) with time averages. Empty when the
/// lengths differ, a series is empty, or either variance vanishes.
std::optional<double> correlation(std::span<const double> x, std::span<const double> y);

/// Real part of the normalized complex covariance
/// (<X conj Y> - <X><conj Y>) / sqrt((<|X|^2> - |<X>|^2)(<|Y|^2> - |<Y>|^2)).
std::optional<double> correlation(std::span<const Complex> x, std::span<const Complex> y);

/// Series derived from one probe: amplitude A = |a|, unwrapped phase phi and
/// phase factor psi = a / |a| (psi = 1 where a = 0).
struct ModeVariables {
  std::vector<double> amplitude;
  std::vector<double> phase;
  std::vector<Complex> phase_factor;
};

ModeVariables mode_variables(std::span<const Complex> samples);

}  // namespace gravwave
