#pragma once

#include <cstdint>

#include "chlab/field.hpp"

namespace chlab {

/// Which nonlocal transport equation is being integrated.
struct ModelKind {
  enum class Tag { CH, BFamily, Novikov };
  Tag tag = Tag::CH;
  double b = 2.0;  // only meaningful for BFamily

  static ModelKind ch() { return {Tag::CH, 2.0}; }
  static ModelKind bfamily(double b) { return {Tag::BFamily, b}; }
  static ModelKind novikov() { return {Tag::Novikov, 0.0}; }

  /// Polynomial degree of the nonlinearity; fixes the dealias rule
  /// (quadratic -> keep N/3, cubic -> keep N/4).
  int nonlinearity_degree() const { return tag == Tag::Novikov ? 3 : 2; }
};

struct EvolveConfig {
  double dt_safety = 0.9;             // in (0,1]
  std::int64_t max_steps = 4'000'000;
};

struct EvolveResult {
  Field u;
  std::int64_t steps = 0;
  double t_reached = 0.0;
  double h1_initial = 0.0;
  double h1_final = 0.0;
  double h1_drift_rel = 0.0;
};

/// Result of integrating the perturbation d(t) = S_t(u0) - u0 directly.
/// The expanded right-hand side avoids the catastrophic cancellation of
/// forming S_t(u0) - u0 after the fact, which matters when t is tiny.
struct PerturbationResult {
  Field delta;  // S_t(u0) - u0
  Field u;      // u0 + delta
  std::int64_t steps = 0;
  double t_reached = 0.0;
  double h1_drift_rel = 0.0;
};

/// P(u) = -dx (1-dxx)^{-1} (u^2 + (1/2)(dx u)^2), products dealiased.
Field nonlocal_P(const Field& u);

/// -u dx u + P(u).
Field ch_rhs(const Field& u);

/// -u dx u - dx (1-dxx)^{-1} ((b/2) u^2 + ((3-b)/2)(dx u)^2).
Field bfamily_rhs(const Field& u, double b);

/// -v^2 dx v - (1-dxx)^{-1} ((1/2) v_x^3 + dx((3/2) v v_x^2 + v^3)).
Field novikov_rhs(const Field& v);

Field model_rhs(const ModelKind& model, const Field& u);

/// One classical RK4 step; the result is re-dealiased.  Throws on
/// non-finite values (instability).
Field step_rk4(const Field& u, double dt, const ModelKind& model);

/// Integrate to t_end with CFL-limited steps
/// dt = dt_safety * dx / max(1, ||u||_inf + ||u||_inf^2), final step
/// shortened to land on t_end exactly.
EvolveResult evolve(const Field& u0, double t_end, const ModelKind& model,
                    const EvolveConfig& cfg);

/// Same time stepping, but integrating d(t) = S_t(u0) - u0.
PerturbationResult evolve_perturbation(const Field& u0, double t_end,
                                       const ModelKind& model,
                                       const EvolveConfig& cfg);

/// The H^1 energy integral(u^2 + (dx u)^2) dx by quadrature.
double h1_invariant(const Field& u);

double mean_integral(const Field& u);

}  // namespace chlab
