#include "chlab/evolution.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "chlab/spectral.hpp"
#include "fft_backend.hpp"

namespace chlab {
namespace {

// Internal kernels work on raw sample vectors with phase-free DFTs: the
// box-offset phase cancels in any fwd -> multiplier -> inv composition.

struct SymbolTables {
  std::int64_t n = 0;
  std::int64_t keep = 0;              // dealias index for the model degree
  std::vector<double> xi_odd;         // xi with the Nyquist mode zeroed
  std::vector<double> lam;            // 1/(1+xi^2)
  std::vector<double> pxi;            // -xi/(1+xi^2), Nyquist zeroed

  static SymbolTables make(const Grid& g, int degree) {
    SymbolTables t;
    t.n = g.num_points;
    t.keep = g.dealias_index(degree);
    t.xi_odd.resize(std::size_t(t.n));
    t.lam.resize(std::size_t(t.n));
    t.pxi.resize(std::size_t(t.n));
    for (std::int64_t i = 0; i < t.n; ++i) {
      const double xi = g.xi(i);
      t.xi_odd[std::size_t(i)] = xi;
      t.lam[std::size_t(i)] = 1.0 / (1.0 + xi * xi);
      t.pxi[std::size_t(i)] = -xi / (1.0 + xi * xi);
    }
    t.xi_odd[std::size_t(t.n / 2)] = 0.0;
    t.pxi[std::size_t(t.n / 2)] = 0.0;
    return t;
  }
};

void mask_spectrum(Spectrum& c, std::int64_t keep) {
  const std::int64_t n = std::int64_t(c.size());
  for (std::int64_t i = keep + 1; i <= n - keep - 1; ++i) c[std::size_t(i)] = 0.0;
}

Spectrum fwd(const std::vector<double>& s) {
  Spectrum buf(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) buf[i] = s[i];
  Spectrum out;
  fft::forward(buf, out);
  return out;
}

std::vector<double> inv_real(const Spectrum& c) {
  Spectrum out;
  fft::backward(c, out);
  const double inv_n = 1.0 / double(c.size());
  std::vector<double> s(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) s[i] = out[i].real() * inv_n;
  return s;
}

std::vector<double> deriv_samples(const Spectrum& c, const SymbolTables& t) {
  Spectrum d(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double x = t.xi_odd[i];
    d[i] = {-x * c[i].imag(), x * c[i].real()};
  }
  return inv_real(d);
}

// RHS of the quadratic family in b-form; b = 2 is Camassa-Holm.
std::vector<double> rhs_quadratic(const std::vector<double>& u, double b,
                                  const SymbolTables& t) {
  const std::size_t n = u.size();
  Spectrum cu = fwd(u);
  std::vector<double> du = deriv_samples(cu, t);
  std::vector<double> adv(n), src(n);
  const double cb = 0.5 * b, cg = 0.5 * (3.0 - b);
  for (std::size_t i = 0; i < n; ++i) {
    adv[i] = u[i] * du[i];
    src[i] = cb * u[i] * u[i] + cg * du[i] * du[i];
  }
  Spectrum ca = fwd(adv), cs = fwd(src);
  for (std::size_t i = 0; i < n; ++i) {
    // -adv + P(D) src, with P(D) = i * pxi
    const double pr = -t.pxi[i] * cs[i].imag();
    const double pi = t.pxi[i] * cs[i].real();
    ca[i] = {-ca[i].real() + pr, -ca[i].imag() + pi};
  }
  mask_spectrum(ca, t.keep);
  return inv_real(ca);
}

std::vector<double> rhs_novikov(const std::vector<double>& v,
                                const SymbolTables& t) {
  const std::size_t n = v.size();
  Spectrum cv = fwd(v);
  std::vector<double> dv = deriv_samples(cv, t);
  std::vector<double> adv(n), c1(n), c2(n);
  for (std::size_t i = 0; i < n; ++i) {
    adv[i] = v[i] * v[i] * dv[i];
    c1[i] = 0.5 * dv[i] * dv[i] * dv[i];
    c2[i] = 1.5 * v[i] * dv[i] * dv[i] + v[i] * v[i] * v[i];
  }
  Spectrum ca = fwd(adv), s1 = fwd(c1), s2 = fwd(c2);
  for (std::size_t i = 0; i < n; ++i) {
    // -adv - lam*(s1 + i xi s2)
    const double qr = s1[i].real() - t.xi_odd[i] * s2[i].imag();
    const double qi = s1[i].imag() + t.xi_odd[i] * s2[i].real();
    ca[i] = {-ca[i].real() - t.lam[i] * qr, -ca[i].imag() - t.lam[i] * qi};
  }
  mask_spectrum(ca, t.keep);
  return inv_real(ca);
}

std::vector<double> model_rhs_samples(const ModelKind& m,
                                      const std::vector<double>& u,
                                      const SymbolTables& t) {
  switch (m.tag) {
    case ModelKind::Tag::CH:
      return rhs_quadratic(u, 2.0, t);
    case ModelKind::Tag::BFamily:
      return rhs_quadratic(u, m.b, t);
    case ModelKind::Tag::Novikov:
      return rhs_novikov(u, t);
  }
  throw std::logic_error("unknown model");
}

// Precomputed base-state products for the perturbation equation
// d' = rhs(u0) + [rhs(u0 + d) - rhs(u0)], with the bracket expanded
// algebraically so no difference of near-equal quantities is ever formed.
struct BaseState {
  std::vector<double> u0, du0, u0sq, du0sq, rhs0;
};

BaseState make_base(const ModelKind& m, const std::vector<double>& u0,
                    const SymbolTables& t) {
  BaseState b;
  b.u0 = u0;
  b.rhs0 = model_rhs_samples(m, u0, t);
  b.du0 = deriv_samples(fwd(u0), t);
  b.u0sq.resize(u0.size());
  b.du0sq.resize(u0.size());
  for (std::size_t i = 0; i < u0.size(); ++i) {
    b.u0sq[i] = u0[i] * u0[i];
    b.du0sq[i] = b.du0[i] * b.du0[i];
  }
  return b;
}

std::vector<double> rhs_delta_quadratic(const std::vector<double>& d, double bb,
                                        const BaseState& base,
                                        const SymbolTables& t) {
  const std::size_t n = d.size();
  Spectrum cd = fwd(d);
  std::vector<double> dd = deriv_samples(cd, t);
  std::vector<double> adv(n), src(n);
  const double cb = 0.5 * bb, cg = 0.5 * (3.0 - bb);
  for (std::size_t i = 0; i < n; ++i) {
    adv[i] = base.u0[i] * dd[i] + d[i] * base.du0[i] + d[i] * dd[i];
    src[i] = 2.0 * cb * base.u0[i] * d[i] + cb * d[i] * d[i] +
             2.0 * cg * base.du0[i] * dd[i] + cg * dd[i] * dd[i];
  }
  Spectrum ca = fwd(adv), cs = fwd(src);
  for (std::size_t i = 0; i < n; ++i) {
    const double pr = -t.pxi[i] * cs[i].imag();
    const double pi = t.pxi[i] * cs[i].real();
    ca[i] = {-ca[i].real() + pr, -ca[i].imag() + pi};
  }
  mask_spectrum(ca, t.keep);
  return inv_real(ca);
}

std::vector<double> rhs_delta_novikov(const std::vector<double>& d,
                                      const BaseState& base,
                                      const SymbolTables& t) {
  const std::size_t n = d.size();
  Spectrum cd = fwd(d);
  std::vector<double> dd = deriv_samples(cd, t);
  std::vector<double> adv(n), c1(n), c2(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double v0 = base.u0[i], dv0 = base.du0[i];
    const double di = d[i], ddi = dd[i];
    adv[i] = base.u0sq[i] * ddi + (2.0 * v0 * di + di * di) * (dv0 + ddi);
    c1[i] = 0.5 * (3.0 * base.du0sq[i] * ddi + 3.0 * dv0 * ddi * ddi +
                   ddi * ddi * ddi);
    c2[i] = 1.5 * (v0 * (2.0 * dv0 * ddi + ddi * ddi) +
                   di * (dv0 + ddi) * (dv0 + ddi)) +
            3.0 * base.u0sq[i] * di + 3.0 * v0 * di * di + di * di * di;
  }
  Spectrum ca = fwd(adv), s1 = fwd(c1), s2 = fwd(c2);
  for (std::size_t i = 0; i < n; ++i) {
    const double qr = s1[i].real() - t.xi_odd[i] * s2[i].imag();
    const double qi = s1[i].imag() + t.xi_odd[i] * s2[i].real();
    ca[i] = {-ca[i].real() - t.lam[i] * qr, -ca[i].imag() - t.lam[i] * qi};
  }
  mask_spectrum(ca, t.keep);
  return inv_real(ca);
}

std::vector<double> delta_rhs_samples(const ModelKind& m,
                                      const std::vector<double>& d,
                                      const BaseState& base,
                                      const SymbolTables& t) {
  std::vector<double> out;
  switch (m.tag) {
    case ModelKind::Tag::CH:
      out = rhs_delta_quadratic(d, 2.0, base, t);
      break;
    case ModelKind::Tag::BFamily:
      out = rhs_delta_quadratic(d, m.b, base, t);
      break;
    case ModelKind::Tag::Novikov:
      out = rhs_delta_novikov(d, base, t);
      break;
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += base.rhs0[i];
  return out;
}

bool all_finite(const std::vector<double>& s) {
  for (double v : s)
    if (!std::isfinite(v)) return false;
  return true;
}

double linf(const std::vector<double>& s) {
  double m = 0.0;
  for (double v : s) m = std::max(m, std::abs(v));
  return m;
}

template <typename Rhs>
void rk4_step_inplace(std::vector<double>& u, double dt, Rhs&& rhs,
                      const SymbolTables& t) {
  const std::size_t n = u.size();
  std::vector<double> k1 = rhs(u);
  std::vector<double> stage(n);
  for (std::size_t i = 0; i < n; ++i) stage[i] = u[i] + 0.5 * dt * k1[i];
  std::vector<double> k2 = rhs(stage);
  for (std::size_t i = 0; i < n; ++i) stage[i] = u[i] + 0.5 * dt * k2[i];
  std::vector<double> k3 = rhs(stage);
  for (std::size_t i = 0; i < n; ++i) stage[i] = u[i] + dt * k3[i];
  std::vector<double> k4 = rhs(stage);
  const double w = dt / 6.0;
  for (std::size_t i = 0; i < n; ++i)
    u[i] += w * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  Spectrum c = fwd(u);
  mask_spectrum(c, t.keep);
  u = inv_real(c);
  if (!all_finite(u))
    throw std::runtime_error("step_rk4: non-finite values (instability); shrink dt");
}

double cfl_dt(double dt_safety, double dx, double amp) {
  return dt_safety * dx / std::max(1.0, amp + amp * amp);
}

}  // namespace

Field nonlocal_P(const Field& u) {
  const SymbolTables t = SymbolTables::make(u.grid(), 2);
  const std::size_t n = u.samples().size();
  std::vector<double> du = deriv_samples(fwd(u.samples()), t);
  std::vector<double> src(n);
  for (std::size_t i = 0; i < n; ++i)
    src[i] = u.samples()[i] * u.samples()[i] + 0.5 * du[i] * du[i];
  Spectrum cs = fwd(src);
  for (std::size_t i = 0; i < n; ++i) {
    const double pr = -t.pxi[i] * cs[i].imag();
    const double pi = t.pxi[i] * cs[i].real();
    cs[i] = {pr, pi};
  }
  mask_spectrum(cs, t.keep);
  return Field(u.grid(), inv_real(cs));
}

Field ch_rhs(const Field& u) {
  const SymbolTables t = SymbolTables::make(u.grid(), 2);
  return Field(u.grid(), rhs_quadratic(u.samples(), 2.0, t));
}

Field bfamily_rhs(const Field& u, double b) {
  const SymbolTables t = SymbolTables::make(u.grid(), 2);
  return Field(u.grid(), rhs_quadratic(u.samples(), b, t));
}

Field novikov_rhs(const Field& v) {
  const SymbolTables t = SymbolTables::make(v.grid(), 3);
  return Field(v.grid(), rhs_novikov(v.samples(), t));
}

Field model_rhs(const ModelKind& model, const Field& u) {
  const SymbolTables t =
      SymbolTables::make(u.grid(), model.nonlinearity_degree());
  return Field(u.grid(), model_rhs_samples(model, u.samples(), t));
}

Field step_rk4(const Field& u, double dt, const ModelKind& model) {
  if (!(dt > 0.0)) throw std::invalid_argument("step_rk4: dt must be positive");
  const SymbolTables t =
      SymbolTables::make(u.grid(), model.nonlinearity_degree());
  std::vector<double> s = u.samples();
  rk4_step_inplace(
      s, dt, [&](const std::vector<double>& x) { return model_rhs_samples(model, x, t); },
      t);
  return Field(u.grid(), std::move(s));
}

EvolveResult evolve(const Field& u0, double t_end, const ModelKind& model,
                    const EvolveConfig& cfg) {
  if (t_end < 0.0) throw std::invalid_argument("evolve: t_end must be >= 0");
  if (!(cfg.dt_safety > 0.0 && cfg.dt_safety <= 1.0))
    throw std::invalid_argument("evolve: dt_safety must be in (0,1]");
  const SymbolTables tab =
      SymbolTables::make(u0.grid(), model.nonlinearity_degree());
  auto rhs = [&](const std::vector<double>& x) {
    return model_rhs_samples(model, x, tab);
  };

  EvolveResult res;
  res.h1_initial = h1_invariant(u0);
  std::vector<double> u = u0.samples();
  double t = 0.0;
  while (t < t_end) {
    if (res.steps >= cfg.max_steps) {
      std::ostringstream os;
      os << "evolve: max_steps exceeded at t = " << t;
      throw std::runtime_error(os.str());
    }
    double dt = cfl_dt(cfg.dt_safety, u0.grid().dx, linf(u));
    dt = std::min(dt, t_end - t);
    try {
      rk4_step_inplace(u, dt, rhs, tab);
    } catch (const std::runtime_error&) {
      std::ostringstream os;
      os << "evolve: instability at t = " << t;
      throw std::runtime_error(os.str());
    }
    t += dt;
    ++res.steps;
  }
  res.t_reached = t;
  res.u = Field(u0.grid(), std::move(u));
  res.h1_final = h1_invariant(res.u);
  res.h1_drift_rel = std::abs(res.h1_final - res.h1_initial) /
                     std::max(res.h1_initial, 1e-300);
  return res;
}

PerturbationResult evolve_perturbation(const Field& u0, double t_end,
                                       const ModelKind& model,
                                       const EvolveConfig& cfg) {
  if (t_end < 0.0) throw std::invalid_argument("evolve: t_end must be >= 0");
  if (!(cfg.dt_safety > 0.0 && cfg.dt_safety <= 1.0))
    throw std::invalid_argument("evolve: dt_safety must be in (0,1]");
  const SymbolTables tab =
      SymbolTables::make(u0.grid(), model.nonlinearity_degree());
  const BaseState base = make_base(model, u0.samples(), tab);
  const double amp0 = linf(u0.samples());
  auto rhs = [&](const std::vector<double>& d) {
    return delta_rhs_samples(model, d, base, tab);
  };

  PerturbationResult res;
  std::vector<double> d(u0.samples().size(), 0.0);
  double t = 0.0;
  std::int64_t steps = 0;
  while (t < t_end) {
    if (steps >= cfg.max_steps) {
      std::ostringstream os;
      os << "evolve_perturbation: max_steps exceeded at t = " << t;
      throw std::runtime_error(os.str());
    }
    double dt = cfl_dt(cfg.dt_safety, u0.grid().dx, amp0 + linf(d));
    dt = std::min(dt, t_end - t);
    rk4_step_inplace(d, dt, rhs, tab);
    t += dt;
    ++steps;
  }
  res.steps = steps;
  res.t_reached = t;
  res.delta = Field(u0.grid(), std::move(d));
  res.u = u0 + res.delta;
  const double h0 = h1_invariant(u0);
  res.h1_drift_rel = std::abs(h1_invariant(res.u) - h0) / std::max(h0, 1e-300);
  return res;
}

double h1_invariant(const Field& u) {
  Field du = derivative(u);
  double acc = 0.0;
  for (std::size_t i = 0; i < u.samples().size(); ++i) {
    const double a = u.samples()[i], b = du.samples()[i];
    acc += a * a + b * b;
  }
  return acc * u.grid().dx;
}

double mean_integral(const Field& u) {
  double acc = 0.0;
  for (double v : u.samples()) acc += v;
  return acc * u.grid().dx;
}

}  // namespace chlab
