#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gravwave {

/// Integer wavevector index l = (x, y); the physical wavevector is (2*pi/L) * l.
struct Wavevector {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr bool operator==(Wavevector, Wavevector) = default;
  friend constexpr auto operator<=>(Wavevector, Wavevector) = default;

  constexpr Wavevector operator+(Wavevector o) const { return {x + o.x, y + o.y}; }
  constexpr Wavevector operator-(Wavevector o) const { return {x - o.x, y - o.y}; }
  constexpr Wavevector operator-() const { return {-x, -y}; }
  constexpr Wavevector operator*(std::int64_t s) const { return {x * s, y * s}; }
  constexpr std::int64_t norm2() const { return x * x + y * y; }
};

/// Periodic box geometry for an n_x by n_y pseudo-spectral grid.
///
/// Spectral arrays use FFT ordering in both directions and are stored
/// row-major with x as the slow index: storage index = ix * n_y + iy where
/// ix = l_x mod n_x. Logical indices run over [-n/2, n/2 - 1] per axis.
///
/// A mode is retained by the dealias mask when |l_x| < f * n_x / 2 and
/// |l_y| < f * n_y / 2 (strict). With f = 1 only the Nyquist rows/columns
/// are dropped.
class SpectralGrid {
 public:
  SpectralGrid(int n_x, int n_y, double box_length = 6.283185307179586, double dealias_fraction = 0.5);

  int nx() const noexcept { return nx_; }
  int ny() const noexcept { return ny_; }
  double box_length() const noexcept { return box_length_; }
  double dealias_fraction() const noexcept { return dealias_fraction_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(nx_) * static_cast<std::size_t>(ny_); }

  /// 2*pi/L.
  double unit_wavenumber() const noexcept { return unit_k_; }

  bool contains(Wavevector l) const noexcept;
  /// Storage index of a logical wavevector; l must satisfy contains(l).
  std::size_t index(Wavevector l) const;
  Wavevector wavevector(std::size_t idx) const noexcept { return labels_[idx]; }
  /// Storage index of -l, with Nyquist indices mapping onto themselves.
  std::size_t conjugate_index(std::size_t idx) const noexcept { return conj_[idx]; }

  double kx(std::size_t idx) const noexcept { return unit_k_ * static_cast<double>(labels_[idx].x); }
  double ky(std::size_t idx) const noexcept { return unit_k_ * static_cast<double>(labels_[idx].y); }
  double k_magnitude(std::size_t idx) const noexcept { return kmag_[idx]; }
  double k_magnitude(Wavevector l) const;

  bool retained(std::size_t idx) const noexcept { return mask_[idx] != 0; }
  bool is_nyquist(std::size_t idx) const noexcept;

  /// Largest physical wavenumber on either axis, (2*pi/L) * max(n_x, n_y) / 2.
  double axis_k_max() const noexcept;

  friend bool operator==(const SpectralGrid& a, const SpectralGrid& b) noexcept {
    return a.nx_ == b.nx_ && a.ny_ == b.ny_ && a.box_length_ == b.box_length_ &&
           a.dealias_fraction_ == b.dealias_fraction_;
  }

 private:
  int nx_;
  int ny_;
  double box_length_;
  double dealias_fraction_;
  double unit_k_;
  std::vector<Wavevector> labels_;
  std::vector<std::size_t> conj_;
  std::vector<double> kmag_;
  std::vector<unsigned char> mask_;
};

}  // namespace gravwave
