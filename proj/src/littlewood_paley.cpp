#include "chlab/littlewood_paley.hpp"

#include <cmath>
#include <stdexcept>

#include "chlab/spectral.hpp"

namespace chlab {
namespace {

std::size_t lattice_index(const Grid& grid, std::int64_t k) {
  return std::size_t(k >= 0 ? k : k + grid.num_points);
}

Field dealias_quadratic(const Field& f) {
  Spectrum c = f.spectrum();
  truncate_spectrum(c, f.grid(), f.grid().dealias_index(2));
  return from_spectrum_trusted(c, f.grid());
}

Field pointwise_product(const Field& a, const Field& b) {
  if (!(a.grid() == b.grid()))
    throw std::invalid_argument("product: grid mismatch");
  std::vector<double> s(a.samples());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] *= b.samples()[i];
  return Field(a.grid(), std::move(s));
}

void require_same_grid(const Field& f, const DyadicCutoffs& cut) {
  if (!(f.grid() == cut.grid))
    throw std::invalid_argument("littlewood_paley: field/cutoff grid mismatch");
}

}  // namespace

double smooth_step(double t, double a, double b) {
  if (t <= a) return 1.0;
  if (t >= b) return 0.0;
  const double pa = std::exp(-1.0 / (t - a));     // psi(t-a)
  const double pb = std::exp(-1.0 / (b - t));     // psi(b-t)
  return pb / (pb + pa);
}

double theta_symbol(double xi) { return smooth_step(std::abs(xi), 0.75, 4.0 / 3.0); }

double phi_symbol(double xi) { return theta_symbol(xi * 0.5) - theta_symbol(xi); }

DyadicCutoffs build_cutoffs(const Grid& grid) {
  const double nyq = grid.nyquist_xi();
  if (nyq < 8.0 / 3.0)
    throw std::invalid_argument("build_cutoffs: grid too small to hold block j=0");

  DyadicCutoffs cut;
  cut.grid = grid;
  int j_max = 0;
  while (std::ldexp(8.0 / 3.0, j_max) < nyq) ++j_max;
  cut.j_max = j_max;

  const double L = double(grid.box_scale);
  const std::int64_t k_nyq = grid.num_points / 2;

  // theta: support |xi| < 4/3
  cut.theta.k_lo = 0;
  cut.theta.k_hi = std::min<std::int64_t>(k_nyq, std::int64_t(std::floor(4.0 / 3.0 * L)));
  for (std::int64_t k = 0; k <= cut.theta.k_hi; ++k)
    cut.theta.values.push_back(theta_symbol(double(k) / L));

  cut.phi.resize(std::size_t(j_max) + 1);
  for (int j = 0; j <= j_max; ++j) {
    AnnulusSymbol& sym = cut.phi[std::size_t(j)];
    const double scale = std::ldexp(1.0, -j);
    sym.k_lo = std::int64_t(std::ceil(0.75 / scale * L));
    sym.k_hi = j < j_max
                   ? std::min<std::int64_t>(k_nyq, std::int64_t(std::floor(8.0 / 3.0 / scale * L)))
                   : k_nyq;
    if (sym.k_lo > sym.k_hi) {
      sym.k_lo = 0;
      sym.k_hi = -1;
      continue;
    }
    sym.values.reserve(std::size_t(sym.k_hi - sym.k_lo + 1));
    for (std::int64_t k = sym.k_lo; k <= sym.k_hi; ++k) {
      const double xi = double(k) / L * scale;
      // The top block closes the discrete partition of unity exactly; it
      // agrees with phi(2^-j .) wherever |xi| <= (3/2) 2^j.
      sym.values.push_back(j < j_max ? phi_symbol(xi) : 1.0 - theta_symbol(xi));
    }
  }
  return cut;
}

Spectrum block_spectrum(const Spectrum& c, const Grid& grid, int j,
                        const DyadicCutoffs& cut) {
  if (j > cut.j_max)
    throw std::out_of_range("block: j exceeds the resolved band");
  Spectrum out(c.size(), 0.0);
  if (j <= -2) return out;
  const AnnulusSymbol& sym = cut.block_symbol(j);
  for (std::int64_t k = sym.k_lo; k <= sym.k_hi; ++k) {
    const double w = sym.values[std::size_t(k - sym.k_lo)];
    std::size_t ip = lattice_index(grid, k);
    out[ip] = c[ip] * w;
    if (k > 0 && k < grid.num_points / 2) {
      std::size_t im = lattice_index(grid, -k);
      out[im] = c[im] * w;
    }
  }
  return out;
}

Field block(const Field& f, int j, const DyadicCutoffs& cut) {
  require_same_grid(f, cut);
  if (j <= -2) return Field::zero(f.grid());
  return from_spectrum_trusted(block_spectrum(f.spectrum(), f.grid(), j, cut), f.grid());
}

Field low_freq(const Field& f, int j, const DyadicCutoffs& cut) {
  require_same_grid(f, cut);
  if (j - 1 > cut.j_max)
    throw std::out_of_range("low_freq: j exceeds the resolved band");
  if (j <= -1) return Field::zero(f.grid());
  if (j == cut.j_max + 1) return f;  // all blocks included
  // S_j = theta(2^-j xi): the standard blocks below j telescope.
  Spectrum c = f.spectrum();
  const double L = double(f.grid().box_scale);
  const double scale = std::ldexp(1.0, -j);
  for (std::int64_t i = 0; i < f.grid().num_points; ++i) {
    const std::int64_t k = f.grid().freq_index(i);
    c[std::size_t(i)] *= theta_symbol(double(k) / L * scale);
  }
  return from_spectrum_trusted(c, f.grid());
}

Field paraproduct(const Field& u, const Field& v, const DyadicCutoffs& cut) {
  require_same_grid(u, cut);
  require_same_grid(v, cut);
  const std::size_t n = u.samples().size();
  std::vector<double> acc(n, 0.0), run(n, 0.0);  // run = S_{j-1} u
  for (int j = -1; j <= cut.j_max; ++j) {
    Field vj = block(v, j, cut);
    for (std::size_t i = 0; i < n; ++i) acc[i] += run[i] * vj.samples()[i];
    if (j - 1 >= -1) {
      Field uq = block(u, j - 1, cut);
      for (std::size_t i = 0; i < n; ++i) run[i] += uq.samples()[i];
    }
  }
  return dealias_quadratic(Field(u.grid(), std::move(acc)));
}

Field remainder_bony(const Field& u, const Field& v, const DyadicCutoffs& cut) {
  require_same_grid(u, cut);
  require_same_grid(v, cut);
  const std::size_t n = u.samples().size();
  std::vector<double> acc(n, 0.0);
  std::vector<Field> ub, vb;
  for (int j = -1; j <= cut.j_max; ++j) {
    ub.push_back(block(u, j, cut));
    vb.push_back(block(v, j, cut));
  }
  for (int j = -1; j <= cut.j_max; ++j)
    for (int k = std::max(-1, j - 1); k <= std::min(cut.j_max, j + 1); ++k) {
      const auto& a = ub[std::size_t(j + 1)].samples();
      const auto& b = vb[std::size_t(k + 1)].samples();
      for (std::size_t i = 0; i < n; ++i) acc[i] += a[i] * b[i];
    }
  return dealias_quadratic(Field(u.grid(), std::move(acc)));
}

Field commutator_block(int j, const Field& v, const Field& f,
                       const DyadicCutoffs& cut) {
  require_same_grid(v, cut);
  require_same_grid(f, cut);
  if (j > cut.j_max)
    throw std::out_of_range("commutator_block: j exceeds the resolved band");
  Field df = derivative(f);
  Field transported = dealias_quadratic(pointwise_product(v, df));
  Field first = block(transported, j, cut);
  Field second = dealias_quadratic(pointwise_product(v, block(df, j, cut)));
  return first - second;
}

}  // namespace chlab
