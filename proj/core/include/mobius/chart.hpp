#pragma once

#include <functional>
#include <map>
#include <string>

#include "mobius/lorentz.hpp"

namespace mobius {

struct Domain {
  double u0 = 0.0, u1 = 1.0, v0 = 0.0, v1 = 1.0;
  bool periodic_u = false, periodic_v = false;
};

struct GridSpec {
  int nu = 16, nv = 16;
};

/// Sample lattice over a domain. Periodic directions exclude the right
/// endpoint; non-periodic directions include both.
std::vector<double> grid_axis(double a, double b, int n, bool periodic);

/// Tensor-product quadrature over the grid: plain trapezoid (= rectangle
/// rule) on periodic directions, composite Simpson otherwise when the
/// point count is odd, trapezoid as fallback.
double integrate_grid(const std::vector<std::vector<double>>& values,
                      const Domain& dom, const GridSpec& grid);

/// A conformally immersed surface chart f: U in C -> S^n, evaluated in jet
/// arithmetic. `eval` returns the n+1 real jets of the S^n-valued point.
struct SurfaceChart {
  std::string name;
  int ambient_n = 3;
  Domain domain;
  std::function<JetVec(double, double, int)> eval;
};

/// One term of a user-supplied trigonometric-polynomial chart:
/// amp * cos(ju*u + jv*v) or amp * sin(ju*u + jv*v) added to `coord`.
struct TrigTerm {
  int coord = 0;
  double amp = 0.0;
  int ju = 0, jv = 0;
  bool use_sin = false;
};

struct GraphChartSpec {
  int ambient_n = 3;
  Domain domain;
  std::vector<TrigTerm> terms;
};

/// Catalog charts: "sphere", "clifford", "veronese", "perturbed-clifford"
/// (parameter "eps"). Throws std::invalid_argument on unknown names.
SurfaceChart catalog(const std::string& name,
                     const std::map<std::string, double>& params = {});

/// Builds a user chart and validates it on `grid`: the image must already
/// lie on S^n (no silent projection) and the parametrization must be
/// conformal. Throws std::invalid_argument carrying the offending residual.
SurfaceChart graph_chart(const GraphChartSpec& spec, const GridSpec& grid);

/// F = (1, f) as an order-K jet; null through all retained orders.
JetVec light_cone_lift(const SurfaceChart& chart, double u, double v, int K);

/// Y = F / sqrt(2 <F_z, F_zb>); output order drops by one.
/// Throws SingularJetError at non-immersion points.
JetVec canonical_lift(const JetVec& F);

/// Canonical lift of `chart` at (u, v) with jet order K (the chart is
/// evaluated at order K+1 internally).
JetVec canonical_lift_at(const SurfaceChart& chart, double u, double v, int K);

/// Chart validation residuals (sup over the grid): sphericity |f|-1,
/// lift nullity, conformality <F_z,F_z>, immersion margin.
struct ChartValidation {
  double sphericity = 0.0;
  double nullity = 0.0;
  double conformality = 0.0;
  double immersion_min = 0.0;
};
ChartValidation validate_chart(const SurfaceChart& chart, const GridSpec& grid,
                               int K = 3);

/// Chart transformed by a Lorentz matrix acting on the light-cone lift,
/// then projected back to S^n (a Moebius transform of the surface).
SurfaceChart transformed_chart(const SurfaceChart& chart,
                               const Eigen::MatrixXd& T);

}  // namespace mobius
