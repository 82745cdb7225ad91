#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "mobius/adjoint.hpp"
#include "mobius/pairmap.hpp"

using namespace mobius;
using mobius::testing::make_test_pair;
using mobius::testing::TestPair;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("pair map of the clifford central spheres") {
  const FramePoint fp = frame_at_point(catalog("clifford"), 1.0, 0.7, 6);
  const PairMapPoint pm = pairmap_fundamental(fp.Y, fp.N);
  CHECK(std::abs(pm.hh + 1.0) < 1e-11);
  CHECK(std::abs(pm.hz_hz) < 1e-11);           // theta = -s = 0
  CHECK(std::abs(pm.hz_hzb + 0.25) < 1e-11);   // (rho + rhobar)/2 = -1/4
}

TEST_CASE("fundamental forms equal the pair invariants") {
  for (unsigned long seed : {3ul, 14ul, 26ul}) {
    const TestPair tp = make_test_pair(seed, 0.7, 0.9 + 0.1 * seed);
    const PairPoint pp = pair_invariants(tp.fp, tp.Yhat);
    const PairMapPoint pm = pairmap_fundamental(tp.fp.Y, tp.Yhat);
    CHECK(std::abs(pm.hh + 1.0) < 1e-10);
    CHECK(std::abs(pm.hz_hz - pp.theta.value()) < 1e-10);
    const Complex half_sum = 0.5 * (pp.rho.value() + std::conj(pp.rho.value()));
    CHECK(std::abs(pm.hz_hzb - half_sum) < 1e-10);
  }
}

TEST_CASE("the map is symmetric in the two factors up to orientation") {
  const TestPair tp = make_test_pair(9, 1.6, 0.4);
  const PairMapPoint ab = pairmap_fundamental(tp.fp.Y, tp.Yhat);
  const PairMapPoint ba = pairmap_fundamental(tp.Yhat, tp.fp.Y);
  // H flips sign, the quadratic quantities are unchanged.
  CHECK(std::abs(ab.hh - ba.hh) < 1e-11);
  CHECK(std::abs(ab.hz_hz - ba.hz_hz) < 1e-10);
  CHECK(std::abs(ab.hz_hzb - ba.hz_hzb) < 1e-10);
  CHECK(std::abs(ab.harmonic_residual - ba.harmonic_residual) < 1e-9);
}

TEST_CASE("unnormalized pairs are refused") {
  const TestPair tp = make_test_pair(5, 0.8, 0.8);
  const JetVec bad = jv_scale(tp.Yhat, Complex(2.0));
  CHECK_THROWS_AS(pairmap_fundamental(tp.fp.Y, bad), std::invalid_argument);
}

TEST_CASE("willmore pairs give a harmonic map, perturbed pairs do not") {
  SUBCASE("surface with its central sphere congruence, willmore case") {
    for (double u : {0.3, 1.7})
      for (double v : {0.6, 2.4}) {
        const FramePoint fp = frame_at_point(catalog("clifford"), u, v, 6);
        CHECK(pairmap_fundamental(fp.Y, fp.N).harmonic_residual < 1e-10);
      }
  }
  SUBCASE("surface with its adjoint transform") {
    const FramePoint fp = frame_at_point(catalog("veronese"), 1.2, 0.9, 9);
    const AdjointPoint ap = adjoint_point(fp, mu_swillmore(fp));
    REQUIRE_FALSE(ap.masked);
    CHECK(pairmap_fundamental(fp.Y, ap.Yhat).harmonic_residual < 1e-8);
  }
  SUBCASE("generic perturbation of the second factor") {
    const FramePoint fp = frame_at_point(catalog("clifford"), 1.1, 0.5, 6);
    const int ord = fp.N[0].order();
    JetVec raw = fp.N;
    const RVec bump{0.03, 0.01, -0.02, 0.04, 0.02, 0.0};
    // A non-willmore-compatible sphere congruence through nearby points.
    for (size_t i = 0; i < raw.size(); ++i)
      raw[i] = raw[i] + Jet2::constant(bump[i], ord);
    const JetVec pert = normalize_pair(fp.Y, raw);
    CHECK(pairmap_fundamental(fp.Y, pert).harmonic_residual > 1e-4);
  }
}

TEST_CASE("harmonic residual is invariant under simultaneous moebius moves") {
  const TestPair tp = make_test_pair(21, 0.9, 1.2);
  const double before = pairmap_fundamental(tp.fp.Y, tp.Yhat).harmonic_residual;
  const Eigen::MatrixXd T = random_lorentz(12, 3);
  const FramePoint fp_t =
      frame_at_point(transformed_chart(tp.chart_a, T), 0.9, 1.2, 6);
  const JetVec yh_t = normalize_pair(
      fp_t.Y, canonical_lift_at(transformed_chart(tp.chart_b, T), 0.9, 1.2, 6));
  const double after = pairmap_fundamental(fp_t.Y, yh_t).harmonic_residual;
  CHECK(std::abs(before - after) < 1e-8 * (1.0 + before));
}

TEST_CASE("pair energy of the clifford central spheres") {
  const SurfaceChart ch = catalog("clifford");
  const GridSpec grid{16, 16};
  const auto us = grid_axis(ch.domain.u0, ch.domain.u1, grid.nu, true);
  const auto vs = grid_axis(ch.domain.v0, ch.domain.v1, grid.nv, true);
  std::vector<std::vector<Complex>> rho(grid.nu,
                                        std::vector<Complex>(grid.nv));
  for (int i = 0; i < grid.nu; ++i)
    for (int j = 0; j < grid.nv; ++j) {
      const FramePoint fp = frame_at_point(ch, us[i], vs[j], 6);
      rho[i][j] = pair_invariants(fp, fp.N).rho.value();
    }
  const double e = pair_energy(rho, ch.domain, grid);
  CHECK(e == doctest::Approx(-4.0 * kPi * kPi).epsilon(1e-10));
}
