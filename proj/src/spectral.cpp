#include "chlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fft_backend.hpp"

namespace chlab {
namespace {

// The box starts at -pi*L, so the plain DFT picks up a phase e^{i pi k}
// relative to the convention c_k = sum_j f(x_j) e^{-i xi_k x_j}.
void apply_alternating_sign(Spectrum& c) {
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
}

}  // namespace

namespace symbols {

MultiplierSymbol differentiation(const Grid& grid) {
  MultiplierSymbol m{Spectrum(std::size_t(grid.num_points)), "d/dx"};
  for (std::int64_t i = 0; i < grid.num_points; ++i)
    m.values[std::size_t(i)] = {0.0, grid.xi(i)};
  // The Nyquist mode has no well-defined sign; zero it (standard for odd
  // symbols on real data).
  m.values[std::size_t(grid.num_points / 2)] = 0.0;
  return m;
}

MultiplierSymbol helmholtz_inverse(const Grid& grid) {
  MultiplierSymbol m{Spectrum(std::size_t(grid.num_points)), "(1-dxx)^-1"};
  for (std::int64_t i = 0; i < grid.num_points; ++i) {
    double xi = grid.xi(i);
    m.values[std::size_t(i)] = 1.0 / (1.0 + xi * xi);
  }
  return m;
}

MultiplierSymbol transport_smoothing(const Grid& grid) {
  MultiplierSymbol m{Spectrum(std::size_t(grid.num_points)), "-dx(1-dxx)^-1"};
  for (std::int64_t i = 0; i < grid.num_points; ++i) {
    double xi = grid.xi(i);
    m.values[std::size_t(i)] = {0.0, -xi / (1.0 + xi * xi)};
  }
  m.values[std::size_t(grid.num_points / 2)] = 0.0;
  return m;
}

MultiplierSymbol neg_laplacian(const Grid& grid) {
  MultiplierSymbol m{Spectrum(std::size_t(grid.num_points)), "dxx"};
  for (std::int64_t i = 0; i < grid.num_points; ++i) {
    double xi = grid.xi(i);
    m.values[std::size_t(i)] = -xi * xi;
  }
  return m;
}

}  // namespace symbols

Spectrum to_spectrum(const Field& f) {
  const std::size_t n = f.samples().size();
  Spectrum buf(n);
  for (std::size_t i = 0; i < n; ++i) buf[i] = f.samples()[i];
  Spectrum out;
  fft::forward(buf, out);
  apply_alternating_sign(out);
  return out;
}

bool is_hermitian(const Spectrum& c, double tol_rel) {
  const std::size_t n = c.size();
  double scale = 0.0;
  for (const auto& v : c) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return true;
  if (std::abs(c[0].imag()) > tol_rel * scale) return false;
  if (std::abs(c[n / 2].imag()) > tol_rel * scale) return false;
  for (std::size_t i = 1; i < n / 2; ++i)
    if (std::abs(c[i] - std::conj(c[n - i])) > tol_rel * scale) return false;
  return true;
}

Field from_spectrum(const Spectrum& c, const Grid& grid) {
  if (std::int64_t(c.size()) != grid.num_points)
    throw std::invalid_argument("from_spectrum: size does not match grid");
  if (!is_hermitian(c, 1e-9))
    throw std::invalid_argument("from_spectrum: spectrum is not Hermitian-symmetric");
  return from_spectrum_trusted(c, grid);
}

Field from_spectrum_trusted(const Spectrum& c, const Grid& grid) {
  if (std::int64_t(c.size()) != grid.num_points)
    throw std::invalid_argument("from_spectrum: size does not match grid");
  Spectrum buf(c);
  buf[c.size() / 2] = buf[c.size() / 2].real();  // force Nyquist real
  apply_alternating_sign(buf);
  Spectrum out;
  fft::backward(buf, out);
  const double inv_n = 1.0 / double(grid.num_points);
  std::vector<double> samples(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) samples[i] = out[i].real() * inv_n;
  Spectrum cache(c);
  cache[c.size() / 2] = cache[c.size() / 2].real();
  return Field(grid, std::move(samples), std::move(cache));
}

Field derivative(const Field& f) {
  return apply_multiplier(f, symbols::differentiation(f.grid()));
}

Field apply_multiplier(const Field& f, const MultiplierSymbol& m) {
  if (m.values.size() != f.samples().size())
    throw std::invalid_argument("apply_multiplier: lattice mismatch");
  Spectrum c = f.spectrum();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] *= m.values[i];
  return from_spectrum_trusted(c, f.grid());
}

double lp_norm(const Field& f, double p) {
  if (p < 1.0) throw std::invalid_argument("lp_norm: p must be >= 1");
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : f.samples()) m = std::max(m, std::abs(v));
    return m;
  }
  double acc = 0.0;
  if (p == 2.0) {
    for (double v : f.samples()) acc += v * v;
  } else if (p == 1.0) {
    for (double v : f.samples()) acc += std::abs(v);
  } else {
    for (double v : f.samples()) acc += std::pow(std::abs(v), p);
  }
  return std::pow(acc * f.grid().dx, 1.0 / p);
}

double l2_norm_sq_spectrum(const Spectrum& c, const Grid& grid) {
  double acc = 0.0;
  for (const auto& v : c) acc += std::norm(v);
  return acc * grid.dx / double(grid.num_points);
}

void truncate_spectrum(Spectrum& c, const Grid& grid, std::int64_t keep_index) {
  for (std::int64_t i = 0; i < grid.num_points; ++i) {
    std::int64_t k = grid.freq_index(i);
    if (k > keep_index || k < -keep_index) c[std::size_t(i)] = 0.0;
  }
}

}  // namespace chlab
