#pragma once

#include <cstdint>
#include <vector>

#include "chlab/field.hpp"
#include "chlab/grid.hpp"

namespace chlab {

/// Smooth transition: 1 for t <= a, 0 for t >= b, built from exp(-1/t).
double smooth_step(double t, double a, double b);

/// theta(xi): 1 on |xi| <= 3/4, 0 on |xi| >= 4/3.
double theta_symbol(double xi);

/// phi(xi) = theta(xi/2) - theta(xi): annulus bump, 1 on 4/3 <= |xi| <= 3/2.
double phi_symbol(double xi);

/// A real even symbol stored on |k| in [k_lo, k_hi] (mirrored to -k).
struct AnnulusSymbol {
  std::int64_t k_lo = 0;
  std::int64_t k_hi = -1;
  std::vector<double> values;  // values[k - k_lo]

  double at(std::int64_t k) const {
    std::int64_t a = k < 0 ? -k : k;
    return (a < k_lo || a > k_hi) ? 0.0 : values[std::size_t(a - k_lo)];
  }
};

/// Tabulated dyadic cutoffs for one grid.  Blocks j < j_max use
/// phi(2^-j xi); the top block closes the partition with 1 - theta(2^-jmax xi)
/// so that theta + sum_j phi_j == 1 on every lattice point.  The two agree
/// wherever |xi| <= (3/2) 2^jmax, so the closing block only differs in the
/// band between that and the Nyquist frequency.
struct DyadicCutoffs {
  Grid grid;
  int j_max = -1;
  AnnulusSymbol theta;                  // block j = -1
  std::vector<AnnulusSymbol> phi;       // blocks j = 0 .. j_max

  const AnnulusSymbol& block_symbol(int j) const {
    return j < 0 ? theta : phi[std::size_t(j)];
  }
};

DyadicCutoffs build_cutoffs(const Grid& grid);

/// Spectrum of Delta_j f given the spectrum of f (no inverse transform).
Spectrum block_spectrum(const Spectrum& c, const Grid& grid, int j,
                        const DyadicCutoffs& cut);

/// Littlewood-Paley block Delta_j f (zero field for j <= -2).
Field block(const Field& f, int j, const DyadicCutoffs& cut);

/// Low-frequency cut-off S_j f = sum_{q <= j-1} Delta_q f.
Field low_freq(const Field& f, int j, const DyadicCutoffs& cut);

/// Bony paraproduct T_u v = sum_j S_{j-1}u Delta_j v.
Field paraproduct(const Field& u, const Field& v, const DyadicCutoffs& cut);

/// Bony remainder R(u,v) = sum_{|j-k|<=1} Delta_j u Delta_k v.
Field remainder_bony(const Field& u, const Field& v, const DyadicCutoffs& cut);

/// [Delta_j, v] dx f = Delta_j(v dx f) - v Delta_j dx f.
Field commutator_block(int j, const Field& v, const Field& f,
                       const DyadicCutoffs& cut);

}  // namespace chlab
