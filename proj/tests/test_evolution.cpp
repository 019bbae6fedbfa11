#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "chlab/evolution.hpp"
#include "chlab/experiment.hpp"
#include "chlab/spectral.hpp"

using namespace chlab;

namespace {

Field cosine(const Grid& g) {
  std::vector<double> s(std::size_t(g.num_points));
  for (std::int64_t i = 0; i < g.num_points; ++i)
    s[std::size_t(i)] = std::cos(g.x(i));
  return Field(g, std::move(s));
}

Field smooth_unit_field(const Grid& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Field u = random_band_limited(g, 8.0, rng);
  const double amp = lp_norm(u, std::numeric_limits<double>::infinity());
  u = (1.0 / amp) * u;
  Spectrum c = u.spectrum();
  truncate_spectrum(c, g, g.dealias_index(3));
  return from_spectrum(c, g);
}

}  // namespace

TEST_CASE("nonlocal P closed form on cos(x)") {
  Grid g = Grid::make(1, 512);
  Field p = nonlocal_P(cosine(g));
  for (std::int64_t i = 0; i < g.num_points; ++i)
    CHECK(p.samples()[std::size_t(i)] ==
          doctest::Approx(0.1 * std::sin(2.0 * g.x(i))).epsilon(1e-12));
}

TEST_CASE("ch_rhs closed form on cos(x)") {
  Grid g = Grid::make(1, 512);
  Field r = ch_rhs(cosine(g));
  for (std::int64_t i = 0; i < g.num_points; ++i)
    CHECK(r.samples()[std::size_t(i)] ==
          doctest::Approx(0.6 * std::sin(2.0 * g.x(i))).epsilon(1e-12));
}

TEST_CASE("b-family at b = 2 is Camassa-Holm") {
  Grid g = Grid::make(12, 1 << 11);
  Field u = smooth_unit_field(g, 21);
  Field a = ch_rhs(u);
  Field b = bfamily_rhs(u, 2.0);
  Field c = bfamily_rhs(u, 3.0);
  CHECK(lp_norm(a - b, 2.0) <= 1e-12);
  CHECK(lp_norm(a - c, 2.0) > 1e-6);
}

TEST_CASE("rhs fields are real with zero mean (quadratic family)") {
  Grid g = Grid::make(12, 1 << 11);
  Field u = smooth_unit_field(g, 22);
  for (const ModelKind& m : {ModelKind::ch(), ModelKind::bfamily(3.0)}) {
    Field r = model_rhs(m, u);
    CHECK(is_hermitian(r.spectrum(), 1e-9));
    CHECK(std::abs(mean_integral(r)) <= 1e-12);
  }
  Field rn = model_rhs(ModelKind::novikov(), u);
  CHECK(is_hermitian(rn.spectrum(), 1e-9));
}

TEST_CASE("rk4 temporal order via Richardson") {
  Grid g = Grid::make(12, 1 << 11);
  Field u = smooth_unit_field(g, 23);
  const ModelKind m = ModelKind::ch();
  auto advance = [&](double h, int steps) {
    Field v = u;
    for (int i = 0; i < steps; ++i) v = step_rk4(v, h, m);
    return v;
  };
  const double dt = 2e-3;
  Field a = advance(dt, 8);
  Field b = advance(dt / 2, 16);
  Field c = advance(dt / 4, 32);
  const double order = std::log2(lp_norm(a - b, 2.0) / lp_norm(b - c, 2.0));
  CHECK(order == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("single step matches first-order expansion") {
  Grid g = Grid::make(12, 1 << 11);
  Field u = smooth_unit_field(g, 24);
  const ModelKind m = ModelKind::ch();
  auto err = [&](double dt) {
    Field v = step_rk4(u, dt, m);
    return lp_norm(v - u - dt * ch_rhs(u), 2.0);
  };
  const double e1 = err(1e-4);
  const double e2 = err(5e-5);
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.05));  // O(dt^2) residual
}

TEST_CASE("evolve basics and conservation") {
  Grid g = Grid::make(12, 1 << 11);
  Field u = smooth_unit_field(g, 25);
  const EvolveConfig cfg{};
  EvolveResult zero = evolve(u, 0.0, ModelKind::ch(), cfg);
  CHECK(lp_norm(zero.u - u, 2.0) == 0.0);
  CHECK(zero.steps == 0);

  EvolveResult er = evolve(u, 0.01, ModelKind::ch(), cfg);
  CHECK(er.t_reached == doctest::Approx(0.01).epsilon(1e-14));
  CHECK(er.h1_drift_rel <= 1e-6);
  const double m0 = mean_integral(u);
  CHECK(std::abs(mean_integral(er.u) - m0) / std::abs(m0) <= 1e-10);
}

TEST_CASE("temporal self-consistency under dt halving") {
  Grid g = Grid::make(12, 1 << 11);
  Field u = smooth_unit_field(g, 26);
  EvolveConfig c1{0.9, 4'000'000};
  EvolveConfig c2{0.45, 4'000'000};
  Field a = evolve(u, 0.01, ModelKind::ch(), c1).u;
  Field b = evolve(u, 0.01, ModelKind::ch(), c2).u;
  CHECK(lp_norm(a - b, 2.0) <= 1e-9);
}

TEST_CASE("perturbation equation matches direct evolution") {
  Grid g = Grid::make(12, 1 << 11);
  Field u = smooth_unit_field(g, 27);
  const double t = 1e-3;
  for (const ModelKind& m :
       {ModelKind::ch(), ModelKind::bfamily(3.0), ModelKind::novikov()}) {
    EvolveResult er = evolve(u, t, m, {});
    PerturbationResult pr = evolve_perturbation(u, t, m, {});
    CHECK(lp_norm((er.u - u) - pr.delta, 2.0) <= 1e-11);
  }
}

TEST_CASE("h1 invariant closed forms") {
  Grid g = Grid::make(1, 1 << 10);
  CHECK(h1_invariant(cosine(g)) == doctest::Approx(2.0 * kPi).epsilon(1e-10));
  CHECK(h1_invariant(Field::zero(g)) == 0.0);
}

TEST_CASE("instability is detected") {
  Grid g = Grid::make(1, 256);
  Field u = cosine(g);
  CHECK_THROWS_AS(
      [&] {
        Field v = u;
        for (int i = 0; i < 200; ++i) v = step_rk4(v, 1e6, ModelKind::ch());
      }(),
      std::runtime_error);
}
