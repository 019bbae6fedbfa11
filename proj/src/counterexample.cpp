#include "chlab/counterexample.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "chlab/spectral.hpp"

namespace chlab {

double profile_hat(double xi) { return smooth_step(std::abs(xi), 0.25, 0.5); }

Profile build_profile(const Grid& grid) {
  const std::size_t n = std::size_t(grid.num_points);
  Spectrum c(n, 0.0);
  // c_k = phi_hat(xi_k)/dx makes the samples a Riemann sum of the inverse
  // Fourier integral: the profile is the same continuum function on every
  // grid with the same box scale.
  const double inv_dx = 1.0 / grid.dx;
  const std::int64_t k_max = std::int64_t(std::floor(0.5 * double(grid.box_scale)));
  for (std::int64_t k = -k_max; k <= k_max; ++k) {
    const double v = profile_hat(double(k) / double(grid.box_scale)) * inv_dx;
    c[std::size_t(k >= 0 ? k : k + grid.num_points)] = v;
  }
  return Profile{from_spectrum(c, grid)};
}

Field mode_packet(const Profile& profile, int n) {
  const Grid& g = profile.field.grid();
  std::vector<double> s(profile.field.samples());
  const std::int64_t num = std::int64_t(17) * (std::int64_t(1) << n) * g.box_scale;
  if (num % 12 == 0) {
    // Carrier sits on the frequency lattice: reduce the phase by integer
    // arithmetic mod N.  Evaluating cos(freq * x) directly loses ~freq*eps(x)
    // of phase per sample, which at high carriers leaks measurable energy
    // outside the packet's dyadic block.
    const std::int64_t k_n = num / 12;
    const std::int64_t N = g.num_points;
    const double sign = (k_n % 2 == 0) ? 1.0 : -1.0;  // cos(theta - pi*k_n)
    const double step = 2.0 * kPi / double(N);
    for (std::int64_t i = 0; i < N; ++i) {
      const std::int64_t m = (k_n * i) % N;
      s[std::size_t(i)] *= sign * std::cos(step * double(m));
    }
  } else {
    const double freq = (17.0 / 12.0) * std::ldexp(1.0, n);
    for (std::int64_t i = 0; i < g.num_points; ++i)
      s[std::size_t(i)] *= std::cos(freq * g.x(i));
  }
  return Field(g, std::move(s));
}

Field build_initial_data(const CounterexampleConfig& cfg, const Grid& grid,
                         const Profile& profile) {
  if (cfg.n_min < 3 || cfg.n_max < cfg.n_min)
    throw std::invalid_argument("build_initial_data: need 3 <= n_min <= n_max");
  const int degree = cfg.model.nonlinearity_degree();
  const std::int64_t keep = grid.dealias_index(degree);
  std::vector<double> acc(std::size_t(grid.num_points), 0.0);
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    if ((std::int64_t(17) * (std::int64_t(1) << n) * grid.box_scale) % 12 != 0) {
      std::ostringstream os;
      os << "build_initial_data: carrier (17/12) 2^" << n
         << " is off the frequency lattice for box scale " << grid.box_scale;
      throw std::invalid_argument(os.str());
    }
    const std::int64_t k_n =
        std::int64_t(17) * (std::int64_t(1) << n) * grid.box_scale / 12;
    const std::int64_t band = grid.box_scale / 2 + 1;
    if (k_n + band > keep) {
      std::ostringstream os;
      os << "build_initial_data: mode n = " << n << " (index " << k_n
         << ") exceeds the degree-" << degree << " dealias cutoff " << keep;
      throw std::invalid_argument(os.str());
    }
    const double amp =
        std::pow(double(n), -2.0) * std::pow(2.0, -double(n) * cfg.bp.s);
    Field f = mode_packet(profile, n);
    for (std::size_t i = 0; i < acc.size(); ++i)
      acc[i] += amp * f.samples()[i];
  }
  return Field(grid, std::move(acc));
}

Field first_order_drift(const Field& u0, const ModelKind& model) {
  return model_rhs(model, u0);
}

Field remainder_field(const Field& u_t, const Field& u0, double t,
                      const ModelKind& model) {
  return u_t - u0 - t * first_order_drift(u0, model);
}

double lower_bound_ratio(const Field& u0, int n, int k, double s, double p,
                         const CounterexampleConfig& cfg,
                         const DyadicCutoffs& cut) {
  (void)cfg;
  if (k < 1) throw std::invalid_argument("lower_bound_ratio: k must be >= 1");
  Field dun = derivative(block(u0, n, cut));
  std::vector<double> prod(dun.samples());
  for (int q = 0; q < k; ++q)
    for (std::size_t i = 0; i < prod.size(); ++i)
      prod[i] *= u0.samples()[i];
  const double norm = lp_norm(Field(u0.grid(), std::move(prod)), p);
  return double(n) * double(n) * std::pow(2.0, double(n) * (s - 1.0)) * norm;
}

double t_schedule(int n, double alpha) {
  if (!(alpha < 1.0)) throw std::invalid_argument("t_schedule: alpha must be < 1");
  const double base = std::pow(double(n), 3.0) * std::ldexp(1.0, -n);
  return std::pow(base, 1.0 / (1.0 - alpha));
}

bool high_regularity_case(const BesovParams& bp) {
  const double inv_p = std::isinf(bp.p) ? 0.0 : 1.0 / bp.p;
  return bp.s > std::max(1.0 + inv_p, 1.5);
}

HolderRecord holder_quotient(const Field& u0, int n, double t, double alpha,
                             const BesovParams& bp, const ModelKind& model,
                             const DyadicCutoffs& cut,
                             const EvolveConfig& ecfg) {
  if (!(t > 0.0)) throw std::invalid_argument("holder_quotient: t must be > 0");
  PerturbationResult pr = evolve_perturbation(u0, t, model, ecfg);

  HolderRecord rec;
  rec.n = n;
  rec.t_n = t;
  rec.grid_L = u0.grid().box_scale;
  rec.grid_N = u0.grid().num_points;
  rec.steps = pr.steps;
  rec.h1_drift_rel = pr.h1_drift_rel;

  rec.besov_distance = besov_norm(pr.delta, bp, cut);
  rec.quotient = std::pow(t, -alpha) * rec.besov_distance;

  Field drift = first_order_drift(u0, model);
  Field w = pr.delta - t * drift;
  const BesovParams wnorm =
      high_regularity_case(bp) ? BesovParams{bp.s - 2.0, bp.p, bp.r}
                               : BesovParams{0.0, bp.p, bp.r};
  rec.remainder_norm = besov_norm(w, wnorm, cut);

  const double two_ns = std::pow(2.0, double(n) * bp.s);
  rec.block_drift_term =
      std::pow(t, 1.0 - alpha) * two_ns * lp_norm(block(drift, n, cut), bp.p);
  rec.block_remainder_term =
      std::pow(t, -alpha) * two_ns * lp_norm(block(w, n, cut), bp.p);
  return rec;
}

}  // namespace chlab
