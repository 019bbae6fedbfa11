#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "chlab/besov.hpp"
#include "chlab/experiment.hpp"
#include "chlab/spectral.hpp"

using namespace chlab;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("admissibility window") {
  CHECK(BesovParams{2.0, 2.0, 2.0}.admissible());
  CHECK(BesovParams{1.5, 2.0, 1.0}.admissible());        // s = 1 + 1/p, r = 1
  CHECK_FALSE(BesovParams{1.5, 2.0, 2.0}.admissible());  // s = 1 + 1/p, r > 1
  CHECK_FALSE(BesovParams{1.2, 2.0, 2.0}.admissible());  // below the line
  CHECK_FALSE(BesovParams{2.0, 2.0, kInf}.admissible()); // r must be finite
  CHECK(BesovParams{1.3, 4.0, 2.0}.admissible());
}

TEST_CASE("single-block field: besov norm is 2^{js} ||f||_p") {
  Grid g = Grid::make(1, 1 << 10);
  DyadicCutoffs cut = build_cutoffs(g);
  std::vector<double> s(std::size_t(g.num_points));
  for (std::int64_t i = 0; i < g.num_points; ++i)
    s[std::size_t(i)] = std::cos(23.0 * g.x(i));  // block j = 4 plateau
  Field f(g, std::move(s));
  const double l2 = lp_norm(f, 2.0);
  for (double r : {1.0, 2.0, kInf}) {
    const double norm = besov_norm(f, {1.7, 2.0, r}, cut);
    CHECK(norm == doctest::Approx(std::pow(2.0, 4.0 * 1.7) * l2).epsilon(1e-10));
  }
}

TEST_CASE("p = 2 fast path agrees with physical-space block norms") {
  Grid g = Grid::make(12, 1 << 11);
  DyadicCutoffs cut = build_cutoffs(g);
  std::mt19937_64 rng(3);
  Field f = random_band_limited(g, 0.8 * g.nyquist_xi(), rng);
  const auto fast = block_lp_norms(f, 2.0, cut);
  for (int j = -1; j <= cut.j_max; ++j) {
    const double slow = lp_norm(block(f, j, cut), 2.0);
    CHECK(fast[std::size_t(j + 1)] == doctest::Approx(slow).epsilon(1e-10));
  }
}

TEST_CASE("besov_norm_from_blocks r = inf is the sup") {
  const std::vector<double> norms{1.0, 2.0, 0.5};  // j = -1, 0, 1
  const double v = besov_norm_from_blocks(norms, 1.0, kInf);
  CHECK(v == doctest::Approx(2.0));  // max(0.5, 2, 1)
}

TEST_CASE("interpolation ratio never exceeds one") {
  Grid g = Grid::make(12, 1 << 11);
  DyadicCutoffs cut = build_cutoffs(g);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    Field f = random_band_limited(g, 30.0, rng);
    const double ratio = interpolation_ratio(f, 1.0, 2.0, 0.3, 2.0, 2.0, cut);
    CHECK(ratio <= 1.0 + 1e-10);
    CHECK(ratio > 0.0);
  }
  Field f = random_band_limited(g, 30.0, rng);
  CHECK_THROWS_AS(interpolation_ratio(f, 1.0, 1.0, 0.3, 2.0, 2.0, cut),
                  std::invalid_argument);
  CHECK_THROWS_AS(interpolation_ratio(f, 1.0, 2.0, 1.5, 2.0, 2.0, cut),
                  std::invalid_argument);
  CHECK_THROWS_AS(interpolation_ratio(Field::zero(g), 1.0, 2.0, 0.3, 2.0, 2.0, cut),
                  std::invalid_argument);
}

TEST_CASE("inequality ratios are finite and guarded") {
  Grid g = Grid::make(12, 1 << 11);
  DyadicCutoffs cut = build_cutoffs(g);
  std::mt19937_64 rng(17);
  Field u = random_band_limited(g, 20.0, rng);
  Field v = random_band_limited(g, 20.0, rng);
  const BesovParams bp{2.0, 2.0, 2.0};

  const double l22 = product_ratio_lemma22(u, v, bp, cut);
  CHECK(l22 > 0.0);
  CHECK(std::isfinite(l22));
  const double l23 = algebra_ratio_lemma23(u, v, bp, cut);
  CHECK(l23 > 0.0);
  const double l26 = commutator_ratio_lemma26(u, v, bp.s, bp.p, cut);
  CHECK(l26 > 0.0);
  const double pl = p_operator_lipschitz_ratio(u, v, bp, cut);
  CHECK(pl > 0.0);

  CHECK_THROWS_AS(product_ratio_lemma22(u, v, {1.2, 2.0, 2.0}, cut),
                  std::invalid_argument);
  CHECK_THROWS_AS(p_operator_lipschitz_ratio(u, u, bp, cut),
                  std::invalid_argument);
}
