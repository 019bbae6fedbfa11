#pragma once

#include <cstdint>

#include "chlab/besov.hpp"
#include "chlab/evolution.hpp"
#include "chlab/field.hpp"
#include "chlab/littlewood_paley.hpp"

namespace chlab {

/// Smooth bump in frequency: 1 on |xi| <= 1/4, 0 on |xi| >= 1/2.
double profile_hat(double xi);

/// The band-limited profile phi (Fourier support radius 1/2).
struct Profile {
  Field field;
};

Profile build_profile(const Grid& grid);

struct CounterexampleConfig {
  BesovParams bp;
  int n_min = 3;
  int n_max = 10;
  double alpha = 0.9;
  ModelKind model = ModelKind::ch();
  int k_power = 1;  // 1 for CH/b-family chains, 2 for Novikov
};

/// Single-block packet f_n = phi(x) cos((17/12) 2^n x).
Field mode_packet(const Profile& profile, int n);

/// Truncated sum_{n=n_min}^{n_max} n^-2 2^{-ns} f_n; every term occupies
/// exactly one dyadic block.  Throws if a mode frequency is off-lattice or
/// above the model's dealias cutoff.
Field build_initial_data(const CounterexampleConfig& cfg, const Grid& grid,
                         const Profile& profile);

/// The model RHS at u0 (the first-order-in-time drift of the flow).
Field first_order_drift(const Field& u0, const ModelKind& model);

/// w = u_t - u0 - t * drift(u0).
Field remainder_field(const Field& u_t, const Field& u0, double t,
                      const ModelKind& model);

/// r_n = n^2 2^{n(s-1)} ||u0^k dx(Delta_n u0)||_{L^p}.
double lower_bound_ratio(const Field& u0, int n, int k, double s, double p,
                         const CounterexampleConfig& cfg,
                         const DyadicCutoffs& cut);

/// t_n with t_n^{1-alpha} = n^3 2^{-n}.
double t_schedule(int n, double alpha);

/// True when s > max(1+1/p, 3/2): the remainder is measured in B^{s-2};
/// otherwise in B^0.
bool high_regularity_case(const BesovParams& bp);

struct HolderRecord {
  int n = 0;
  double t_n = 0.0;
  double quotient = 0.0;         // t^-alpha * besov_distance
  double besov_distance = 0.0;   // ||S_t(u0) - u0||_{B^s_{p,r}}
  double remainder_norm = 0.0;   // ||w|| in the case-appropriate norm
  double block_drift_term = 0.0;      // t^{1-alpha} 2^{ns} ||Delta_n drift||_p
  double block_remainder_term = 0.0;  // t^{-alpha} 2^{ns} ||Delta_n w||_p
  std::int64_t grid_L = 0;
  std::int64_t grid_N = 0;
  std::int64_t steps = 0;
  double h1_drift_rel = 0.0;
};

/// Evolve u0 to time t and assemble the Hoelder quotient record.
HolderRecord holder_quotient(const Field& u0, int n, double t, double alpha,
                             const BesovParams& bp, const ModelKind& model,
                             const DyadicCutoffs& cut, const EvolveConfig& ecfg);

}  // namespace chlab
