#include <doctest.h>

#include <cmath>
#include <random>

#include "chlab/experiment.hpp"
#include "chlab/littlewood_paley.hpp"
#include "chlab/spectral.hpp"

using namespace chlab;

TEST_CASE("smooth_step endpoints and monotonicity") {
  CHECK(smooth_step(0.5, 0.75, 4.0 / 3.0) == 1.0);
  CHECK(smooth_step(0.75, 0.75, 4.0 / 3.0) == 1.0);
  CHECK(smooth_step(4.0 / 3.0, 0.75, 4.0 / 3.0) == 0.0);
  CHECK(smooth_step(2.0, 0.75, 4.0 / 3.0) == 0.0);
  double prev = 1.0;
  for (int i = 1; i <= 100; ++i) {
    const double t = 0.75 + i * (4.0 / 3.0 - 0.75) / 100.0;
    const double v = smooth_step(t, 0.75, 4.0 / 3.0);
    CHECK(v <= prev + 1e-15);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
    prev = v;
  }
}

TEST_CASE("theta/phi symbol plateaus") {
  CHECK(theta_symbol(0.7) == 1.0);
  CHECK(theta_symbol(1.4) == 0.0);
  CHECK(phi_symbol(1.4) == 1.0);   // theta(0.7) - theta(1.4)
  CHECK(phi_symbol(0.7) == 0.0);   // both terms are 1
  CHECK(phi_symbol(2.7) == 0.0);   // both terms are 0
}

TEST_CASE("discrete partition of unity") {
  for (std::int64_t L : {1, 12}) {
    Grid g = Grid::make(L, 1 << 12);
    DyadicCutoffs cut = build_cutoffs(g);
    for (std::int64_t k = 0; k <= g.num_points / 2; ++k) {
      double sum = cut.theta.at(k);
      for (int j = 0; j <= cut.j_max; ++j) sum += cut.phi[std::size_t(j)].at(k);
      CHECK(std::abs(sum - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("blocks reproduce pure modes") {
  Grid g = Grid::make(1, 1 << 10);
  DyadicCutoffs cut = build_cutoffs(g);
  // xi = 23 sits in the plateau of block j = 4 (4/3*16 = 21.3 <= 23 <= 24).
  std::vector<double> s(std::size_t(g.num_points));
  for (std::int64_t i = 0; i < g.num_points; ++i)
    s[std::size_t(i)] = std::cos(23.0 * g.x(i));
  Field f(g, std::move(s));
  Field b4 = block(f, 4, cut);
  CHECK(lp_norm(b4 - f, 2.0) / lp_norm(f, 2.0) <= 1e-12);
  for (int j = -1; j <= cut.j_max; ++j) {
    if (j == 4) continue;
    CHECK(lp_norm(block(f, j, cut), 2.0) / lp_norm(f, 2.0) <= 1e-12);
  }
  CHECK(lp_norm(block(f, -3, cut), 2.0) == 0.0);
  CHECK_THROWS_AS(block(f, cut.j_max + 1, cut), std::out_of_range);
}

TEST_CASE("blocks sum to the identity and S_j telescopes") {
  Grid g = Grid::make(12, 1 << 11);
  DyadicCutoffs cut = build_cutoffs(g);
  std::mt19937_64 rng(7);
  Field f = random_band_limited(g, 0.9 * g.nyquist_xi(), rng);
  Field acc = Field::zero(g);
  for (int j = -1; j <= cut.j_max; ++j) acc = acc + block(f, j, cut);
  CHECK(lp_norm(acc - f, 2.0) / lp_norm(f, 2.0) <= 1e-12);

  for (int j : {0, 2, 4}) {
    Field s_direct = low_freq(f, j, cut);
    Field s_sum = Field::zero(g);
    for (int q = -1; q <= j - 1; ++q) s_sum = s_sum + block(f, q, cut);
    CHECK(lp_norm(s_direct - s_sum, 2.0) / lp_norm(f, 2.0) <= 1e-12);
  }
  Field all = low_freq(f, cut.j_max + 1, cut);
  CHECK(lp_norm(all - f, 2.0) / lp_norm(f, 2.0) <= 1e-12);
}

TEST_CASE("bony decomposition identity") {
  Grid g = Grid::make(12, 1 << 12);
  DyadicCutoffs cut = build_cutoffs(g);
  std::mt19937_64 rng(11);
  const double band = double(g.num_points / 8) / double(g.box_scale);
  Field u = random_band_limited(g, band, rng);
  Field v = random_band_limited(g, band, rng);
  std::vector<double> prod(u.samples());
  for (std::size_t i = 0; i < prod.size(); ++i) prod[i] *= v.samples()[i];
  Field uv(g, std::move(prod));
  Field rec = paraproduct(u, v, cut) + paraproduct(v, u, cut) +
              remainder_bony(u, v, cut);
  CHECK(lp_norm(uv - rec, 2.0) / lp_norm(uv, 2.0) <= 1e-10);
}

TEST_CASE("commutator vanishes for constant transport") {
  Grid g = Grid::make(12, 1 << 11);
  DyadicCutoffs cut = build_cutoffs(g);
  std::mt19937_64 rng(5);
  Field f = random_band_limited(g, 8.0, rng);
  Field v(g, std::vector<double>(std::size_t(g.num_points), 2.5));
  for (int j : {-1, 1, 3}) {
    Field c = commutator_block(j, v, f, cut);
    CHECK(lp_norm(c, 2.0) <= 1e-12 * lp_norm(f, 2.0));
  }
}
