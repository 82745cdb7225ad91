#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "mobius/chart.hpp"

using namespace mobius;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("catalog charts validate") {
  for (const char* name :
       {"sphere", "clifford", "veronese", "perturbed-clifford"}) {
    const SurfaceChart ch = catalog(name);
    const ChartValidation cv = validate_chart(ch, {12, 12});
    CAPTURE(name);
    CHECK(cv.sphericity < 1e-12);
    CHECK(cv.nullity < 1e-12);
    CHECK(cv.conformality < 1e-11);
    CHECK(cv.immersion_min > 1e-3);
  }
  CHECK_THROWS_AS(catalog("torus-of-doom"), std::invalid_argument);
  CHECK_THROWS_AS(catalog("perturbed-clifford", {{"eps", 2.0}}),
                  std::invalid_argument);
}

TEST_CASE("canonical lift is normalized") {
  for (const char* name : {"clifford", "veronese"}) {
    const SurfaceChart ch = catalog(name);
    const JetVec Y = canonical_lift_at(ch, 0.7, 1.3, 5);
    const Jet2 nn = minkowski(Y, Y);
    CHECK(std::abs(nn.value()) < 1e-12);
    const Jet2 g = minkowski(jv_dz(Y), jv_dzb(Y));
    CHECK(std::abs(g.value() - 0.5) < 1e-12);
    CHECK(std::abs(g.dz().value()) < 1e-11);
  }
  // Clifford: the canonical lift is the sqrt(2)-scaled light-cone lift.
  const SurfaceChart cl = catalog("clifford");
  const JetVec F = light_cone_lift(cl, 0.3, 0.4, 4);
  const JetVec Y = canonical_lift_at(cl, 0.3, 0.4, 3);
  for (size_t i = 0; i < Y.size(); ++i)
    CHECK(std::abs(Y[i].value() - std::sqrt(2.0) * F[i].value()) < 1e-12);
}

TEST_CASE("canonical lift rejects non-immersions") {
  SurfaceChart bad;
  bad.name = "constant";
  bad.ambient_n = 3;
  bad.eval = [](double, double, int K) {
    return jv_constant({1, 0, 0, 0}, K);
  };
  CHECK_THROWS_AS(canonical_lift_at(bad, 0.0, 0.0, 3), SingularJetError);
}

TEST_CASE("grid axis endpoints") {
  const auto per = grid_axis(0.0, 2.0 * kPi, 4, true);
  CHECK(per.size() == 4);
  CHECK(per[3] == doctest::Approx(1.5 * kPi));
  const auto cl = grid_axis(0.0, 1.0, 5, false);
  CHECK(cl.front() == 0.0);
  CHECK(cl.back() == 1.0);
  CHECK_THROWS_AS(grid_axis(0.0, 1.0, 2, false), std::invalid_argument);
}

TEST_CASE("grid quadrature against known integrals") {
  SUBCASE("periodic trapezoid is spectrally exact for trig polynomials") {
    Domain dom{0.0, 2.0 * kPi, 0.0, 2.0 * kPi, true, true};
    GridSpec grid{16, 16};
    const auto us = grid_axis(dom.u0, dom.u1, grid.nu, true);
    const auto vs = grid_axis(dom.v0, dom.v1, grid.nv, true);
    std::vector<std::vector<double>> vals(grid.nu,
                                          std::vector<double>(grid.nv));
    for (int i = 0; i < grid.nu; ++i)
      for (int j = 0; j < grid.nv; ++j)
        vals[i][j] = std::sin(us[i]) * std::sin(us[i]) + std::cos(vs[j]);
    // integral of sin^2 u dudv = 2 pi^2; the cos v term integrates to 0.
    CHECK(integrate_grid(vals, dom, grid) ==
          doctest::Approx(2.0 * kPi * kPi).epsilon(1e-12));
  }
  SUBCASE("simpson is exact for cubics") {
    Domain dom{0.0, 1.0, 0.0, 2.0, false, false};
    GridSpec grid{5, 5};
    const auto us = grid_axis(dom.u0, dom.u1, grid.nu, false);
    const auto vs = grid_axis(dom.v0, dom.v1, grid.nv, false);
    std::vector<std::vector<double>> vals(grid.nu,
                                          std::vector<double>(grid.nv));
    for (int i = 0; i < grid.nu; ++i)
      for (int j = 0; j < grid.nv; ++j)
        vals[i][j] = us[i] * us[i] * us[i] + vs[j];
    // integral u^3 over [0,1] times 2  +  integral v over [0,2] times 1.
    CHECK(integrate_grid(vals, dom, grid) ==
          doctest::Approx(0.25 * 2.0 + 2.0).epsilon(1e-12));
  }
}

TEST_CASE("graph charts are validated, not silently projected") {
  const double r = 1.0 / std::sqrt(2.0);
  GraphChartSpec spec;
  spec.ambient_n = 3;
  spec.domain = {0.0, 2.0 * kPi, 0.0, 2.0 * kPi, true, true};
  spec.terms = {{0, r, 1, 0, false},
                {1, r, 1, 0, true},
                {2, r, 0, 1, false},
                {3, r, 0, 1, true}};
  const SurfaceChart ok = graph_chart(spec, {8, 8});
  CHECK(validate_chart(ok, {8, 8}).conformality < 1e-12);

  // Off-sphere image must be rejected, not renormalized.
  GraphChartSpec off = spec;
  off.terms[0].amp = 0.9;
  CHECK_THROWS_AS(graph_chart(off, {8, 8}), std::invalid_argument);

  // On the sphere but non-conformal: unequal radii, equal frequencies.
  GraphChartSpec skew = spec;
  skew.terms[0].amp = skew.terms[1].amp = 0.8;
  skew.terms[2].amp = skew.terms[3].amp = 0.6;
  CHECK_THROWS_AS(graph_chart(skew, {8, 8}), std::invalid_argument);
}

TEST_CASE("transformed charts stay valid and map points by Moebius action") {
  const SurfaceChart base = catalog("clifford");
  const Eigen::MatrixXd T = random_lorentz(17, 3);
  const SurfaceChart moved = transformed_chart(base, T);
  CHECK(validate_chart(moved, {10, 10}).sphericity < 1e-10);
  // The light-cone lifts are projectively related by T.
  const JetVec F = light_cone_lift(base, 0.9, 2.1, 2);
  const JetVec TF = mobius::apply(T, F);
  const JetVec G = light_cone_lift(moved, 0.9, 2.1, 2);
  for (size_t i = 1; i < G.size(); ++i)
    CHECK(std::abs(G[i].value() - TF[i].value() / TF[0].value()) < 1e-12);
}
