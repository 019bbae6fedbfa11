#pragma once

#include <vector>

#include "chlab/field.hpp"
#include "chlab/littlewood_paley.hpp"

namespace chlab {

struct BesovParams {
  double s = 2.0;
  double p = 2.0;  // integrability, may be infinity
  double r = 2.0;  // summability, may be infinity

  /// s > 1 + 1/p with r < infinity, or s = 1 + 1/p with p < infinity, r = 1.
  bool admissible() const;
};

/// ||Delta_j f||_{L^p} for j = -1 .. j_max (index 0 holds j = -1).
std::vector<double> block_lp_norms(const Field& f, double p,
                                   const DyadicCutoffs& cut);

/// Besov norm from precomputed block norms.
double besov_norm_from_blocks(const std::vector<double>& block_norms, double s,
                              double r);

double besov_norm(const Field& f, const BesovParams& bp,
                  const DyadicCutoffs& cut);

/// LHS/RHS of the convexity (interpolation) inequality; always <= 1.
double interpolation_ratio(const Field& f, double s1, double s2, double theta,
                           double p, double r, const DyadicCutoffs& cut);

/// ||uv||_{B^{s-2}} / (||u||_{B^{s-2}} ||v||_{B^{s-1}}).
double product_ratio_lemma22(const Field& u, const Field& v,
                             const BesovParams& bp, const DyadicCutoffs& cut);

/// Algebra property: ||uv||_{B^{s-1}} / (||u||_{B^{s-1}} ||v||_{B^{s-1}}).
double algebra_ratio_lemma23(const Field& u, const Field& v,
                             const BesovParams& bp, const DyadicCutoffs& cut);

/// sup_j 2^{js} ||[Delta_j,v] dx f||_{L^p} over
/// (||dx v||_inf ||f||_{B^s_{p,inf}} + ||dx f||_inf ||dx v||_{B^{s-1}_{p,inf}}).
double commutator_ratio_lemma26(const Field& v, const Field& f, double s,
                                double p, const DyadicCutoffs& cut);

/// ||P(u)-P(v)||_{B^{s-1}} / (||u-v||_{B^{s-1}} (||u||_{B^s}+||v||_{B^s})).
double p_operator_lipschitz_ratio(const Field& u, const Field& v,
                                  const BesovParams& bp,
                                  const DyadicCutoffs& cut);

}  // namespace chlab
