#include "chlab/field.hpp"

#include <stdexcept>

#include "chlab/spectral.hpp"

namespace chlab {

Grid Grid::make(std::int64_t box_scale, std::int64_t num_points) {
  if (box_scale < 1) throw std::invalid_argument("grid: box_scale must be positive");
  if (num_points < 4 || (num_points & (num_points - 1)) != 0)
    throw std::invalid_argument("grid: num_points must be a power of two >= 4");
  Grid g;
  g.box_scale = box_scale;
  g.num_points = num_points;
  g.dx = 2.0 * kPi * double(box_scale) / double(num_points);
  return g;
}

Field::Field(Grid grid, std::vector<double> samples)
    : grid_(grid), samples_(std::move(samples)) {
  if (std::int64_t(samples_.size()) != grid_.num_points)
    throw std::invalid_argument("field: sample count does not match grid");
}

Field::Field(Grid grid, std::vector<double> samples, Spectrum spectrum)
    : Field(grid, std::move(samples)) {
  if (std::int64_t(spectrum.size()) != grid_.num_points)
    throw std::invalid_argument("field: spectrum size does not match grid");
  cache_ = std::make_shared<const Spectrum>(std::move(spectrum));
}

Field Field::zero(const Grid& grid) {
  return Field(grid, std::vector<double>(std::size_t(grid.num_points), 0.0));
}

const Spectrum& Field::spectrum() const {
  if (!cache_) cache_ = std::make_shared<const Spectrum>(to_spectrum(*this));
  return *cache_;
}

Field operator+(const Field& a, const Field& b) {
  if (!(a.grid() == b.grid())) throw std::invalid_argument("field: grid mismatch");
  std::vector<double> s(a.samples());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] += b.samples()[i];
  return Field(a.grid(), std::move(s));
}

Field operator-(const Field& a, const Field& b) {
  if (!(a.grid() == b.grid())) throw std::invalid_argument("field: grid mismatch");
  std::vector<double> s(a.samples());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] -= b.samples()[i];
  return Field(a.grid(), std::move(s));
}

Field operator*(double c, const Field& f) {
  std::vector<double> s(f.samples());
  for (double& v : s) v *= c;
  return Field(f.grid(), std::move(s));
}

}  // namespace chlab
