#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace chlab {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

using Spectrum = std::vector<std::complex<double>>;

/// Periodic lattice for the box [-pi*L, pi*L).  Frequencies are xi_k = k/L
/// with integer k, |k| <= N/2, stored in FFT order (k = i for i <= N/2,
/// k = i - N above).
struct Grid {
  std::int64_t box_scale = 0;   // L
  std::int64_t num_points = 0;  // N, power of two, >= 4
  double dx = 0.0;              // 2*pi*L/N

  static Grid make(std::int64_t box_scale, std::int64_t num_points);

  double x(std::int64_t i) const { return -kPi * double(box_scale) + double(i) * dx; }

  std::int64_t freq_index(std::int64_t i) const {
    return i <= num_points / 2 ? i : i - num_points;
  }
  double xi(std::int64_t i) const { return double(freq_index(i)) / double(box_scale); }
  double xi_of_k(std::int64_t k) const { return double(k) / double(box_scale); }

  double nyquist_xi() const { return double(num_points / 2) / double(box_scale); }

  /// Largest retained |k| under the zero-padding rule for a nonlinearity of
  /// the given polynomial degree (2 -> N/3, 3 -> N/4).
  std::int64_t dealias_index(int degree) const {
    return num_points / (degree + 1);
  }
  double dealias_xi(int degree) const {
    return double(dealias_index(degree)) / double(box_scale);
  }

  double box_length() const { return 2.0 * kPi * double(box_scale); }

  bool operator==(const Grid&) const = default;
};

}  // namespace chlab
