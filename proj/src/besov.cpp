#include "chlab/besov.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "chlab/evolution.hpp"
#include "chlab/spectral.hpp"

namespace chlab {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_zero(const Field& f) {
  for (double v : f.samples())
    if (v != 0.0) return false;
  return true;
}

Field dealiased_product(const Field& a, const Field& b) {
  if (!(a.grid() == b.grid()))
    throw std::invalid_argument("product: grid mismatch");
  std::vector<double> s(a.samples());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] *= b.samples()[i];
  Field prod(a.grid(), std::move(s));
  Spectrum c = prod.spectrum();
  truncate_spectrum(c, a.grid(), a.grid().dealias_index(2));
  return from_spectrum_trusted(c, a.grid());
}

// ||Delta_j f||_{L^2} straight from the spectrum (Parseval), no transform.
double block_l2_norm(const Spectrum& c, const Grid& grid, int j,
                     const DyadicCutoffs& cut) {
  const AnnulusSymbol& sym = cut.block_symbol(j);
  double acc = 0.0;
  for (std::int64_t k = sym.k_lo; k <= sym.k_hi; ++k) {
    const double w = sym.values[std::size_t(k - sym.k_lo)];
    const double w2 = w * w;
    acc += w2 * std::norm(c[std::size_t(k)]);
    if (k > 0 && k < grid.num_points / 2)
      acc += w2 * std::norm(c[std::size_t(grid.num_points - k)]);
  }
  return std::sqrt(acc * grid.dx / double(grid.num_points));
}

}  // namespace

bool BesovParams::admissible() const {
  const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
  if (s > 1.0 + inv_p) return !std::isinf(r);
  if (s == 1.0 + inv_p) return !std::isinf(p) && r == 1.0;
  return false;
}

std::vector<double> block_lp_norms(const Field& f, double p,
                                   const DyadicCutoffs& cut) {
  std::vector<double> norms;
  norms.reserve(std::size_t(cut.j_max) + 2);
  const Spectrum& c = f.spectrum();
  for (int j = -1; j <= cut.j_max; ++j) {
    if (p == 2.0)
      norms.push_back(block_l2_norm(c, f.grid(), j, cut));
    else
      norms.push_back(lp_norm(block(f, j, cut), p));
  }
  return norms;
}

double besov_norm_from_blocks(const std::vector<double>& block_norms, double s,
                              double r) {
  if (std::isinf(r)) {
    double m = 0.0;
    for (std::size_t i = 0; i < block_norms.size(); ++i) {
      const int j = int(i) - 1;
      m = std::max(m, std::pow(2.0, s * j) * block_norms[i]);
    }
    return m;
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < block_norms.size(); ++i) {
    const int j = int(i) - 1;
    acc += std::pow(std::pow(2.0, s * j) * block_norms[i], r);
  }
  return std::pow(acc, 1.0 / r);
}

double besov_norm(const Field& f, const BesovParams& bp,
                  const DyadicCutoffs& cut) {
  return besov_norm_from_blocks(block_lp_norms(f, bp.p, cut), bp.s, bp.r);
}

double interpolation_ratio(const Field& f, double s1, double s2, double theta,
                           double p, double r, const DyadicCutoffs& cut) {
  if (s1 == s2) throw std::invalid_argument("interpolation_ratio: s1 == s2");
  if (theta <= 0.0 || theta >= 1.0)
    throw std::invalid_argument("interpolation_ratio: theta not in (0,1)");
  if (is_zero(f)) throw std::invalid_argument("interpolation_ratio: zero field");
  const auto norms = block_lp_norms(f, p, cut);
  const double mid = theta * s1 + (1.0 - theta) * s2;
  const double lhs = besov_norm_from_blocks(norms, mid, r);
  const double rhs = std::pow(besov_norm_from_blocks(norms, s1, r), theta) *
                     std::pow(besov_norm_from_blocks(norms, s2, r), 1.0 - theta);
  return lhs / rhs;
}

double product_ratio_lemma22(const Field& u, const Field& v,
                             const BesovParams& bp, const DyadicCutoffs& cut) {
  const double inv_p = std::isinf(bp.p) ? 0.0 : 1.0 / bp.p;
  if (!(bp.s > std::max(1.0 + inv_p, 1.5)))
    throw std::invalid_argument("product_ratio_lemma22: requires s > max(1+1/p, 3/2)");
  if (is_zero(u) || is_zero(v))
    throw std::invalid_argument("product_ratio_lemma22: zero field");
  Field uv = dealiased_product(u, v);
  BesovParams lo{bp.s - 2.0, bp.p, bp.r};
  BesovParams mid{bp.s - 1.0, bp.p, bp.r};
  return besov_norm(uv, lo, cut) /
         (besov_norm(u, lo, cut) * besov_norm(v, mid, cut));
}

double algebra_ratio_lemma23(const Field& u, const Field& v,
                             const BesovParams& bp, const DyadicCutoffs& cut) {
  if (is_zero(u) || is_zero(v))
    throw std::invalid_argument("algebra_ratio_lemma23: zero field");
  Field uv = dealiased_product(u, v);
  BesovParams mid{bp.s - 1.0, bp.p, bp.r};
  return besov_norm(uv, mid, cut) /
         (besov_norm(u, mid, cut) * besov_norm(v, mid, cut));
}

double commutator_ratio_lemma26(const Field& v, const Field& f, double s,
                                double p, const DyadicCutoffs& cut) {
  double lhs = 0.0;
  for (int j = -1; j <= cut.j_max; ++j)
    lhs = std::max(lhs, std::pow(2.0, s * j) *
                            lp_norm(commutator_block(j, v, f, cut), p));
  Field dv = derivative(v);
  Field df = derivative(f);
  const double rhs =
      lp_norm(dv, kInf) * besov_norm(f, {s, p, kInf}, cut) +
      lp_norm(df, kInf) * besov_norm(dv, {s - 1.0, p, kInf}, cut);
  if (rhs == 0.0)
    throw std::invalid_argument("commutator_ratio_lemma26: degenerate inputs");
  return lhs / rhs;
}

double p_operator_lipschitz_ratio(const Field& u, const Field& v,
                                  const BesovParams& bp,
                                  const DyadicCutoffs& cut) {
  const double inv_p = std::isinf(bp.p) ? 0.0 : 1.0 / bp.p;
  if (!(bp.s > std::max(1.0 + inv_p, 1.5)))
    throw std::invalid_argument("p_operator_lipschitz_ratio: requires s > max(1+1/p, 3/2)");
  Field diff = u - v;
  if (is_zero(diff))
    throw std::invalid_argument("p_operator_lipschitz_ratio: u == v");
  Field pd = nonlocal_P(u) - nonlocal_P(v);
  BesovParams mid{bp.s - 1.0, bp.p, bp.r};
  const double rhs = besov_norm(diff, mid, cut) *
                     (besov_norm(u, bp, cut) + besov_norm(v, bp, cut));
  return besov_norm(pd, mid, cut) / rhs;
}

}  // namespace chlab
