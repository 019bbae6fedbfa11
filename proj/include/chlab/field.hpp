#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "chlab/grid.hpp"

namespace chlab {

/// A real periodic function: samples on the grid plus a lazily cached
/// discrete Fourier spectrum.  Treated as an immutable value; the cache is
/// not synchronized, so share Fields across threads only after the spectrum
/// has been materialized (or not at all).
class Field {
 public:
  Field() = default;
  Field(Grid grid, std::vector<double> samples);
  Field(Grid grid, std::vector<double> samples, Spectrum spectrum);

  static Field zero(const Grid& grid);

  const Grid& grid() const { return grid_; }
  const std::vector<double>& samples() const { return samples_; }

  /// Forward transform of the samples (unnormalized convention), cached.
  const Spectrum& spectrum() const;
  bool has_spectrum() const { return cache_ != nullptr; }

 private:
  Grid grid_{};
  std::vector<double> samples_;
  mutable std::shared_ptr<const Spectrum> cache_;
};

Field operator+(const Field& a, const Field& b);
Field operator-(const Field& a, const Field& b);
Field operator*(double c, const Field& f);

}  // namespace chlab
