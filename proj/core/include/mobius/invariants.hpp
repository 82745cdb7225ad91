#pragma once

#include <map>
#include <string>

#include "mobius/chart.hpp"
#include "mobius/lorentz.hpp"

namespace mobius {

/// Named residuals, sup-reduced over a grid.
using ResidualReport = std::map<std::string, double>;

void report_max(ResidualReport& into, const ResidualReport& point);

/// Canonical frame {Y, Y_z, Y_zb, N} of a canonical lift, with the Hopf
/// differential kappa, Schwarzian s and an orthonormal basis of the
/// normal space, all as jets at one parameter point.
struct FramePoint {
  JetVec Y, Yz, Yzb, N;
  JetVec kappa;
  Jet2 s;
  std::vector<JetVec> normal_basis;
  int ambient_n = 3;

  Frame4 frame() const { return Frame4{Y, Yz, Yzb, N}; }
};

enum class Dir { z, zb };

/// Builds the frame from a canonical-lift jet of order >= 4:
/// N = 2 Y_zzb + 2 <Y_zzb, Y_zzb> Y, s = 2 <Y_zz, N>,
/// kappa = Y_zz + (s/2) Y.
FramePoint frame_at(const JetVec& Y, double tol = 1e-8);

/// Normal connection: the V-perp part of the z (or zb) derivative of a
/// normal field.
JetVec normal_D(const FramePoint& fp, const JetVec& psi, Dir dir,
                double tol = 1e-6);

/// Structure equations plus Gauss / Codazzi / Ricci residuals at one point.
ResidualReport structure_residuals(const FramePoint& fp);

/// || D_zb D_zb kappa + (sbar/2) kappa || in the normal metric.
double willmore_residual(const FramePoint& fp);

/// W = integral of <kappa, kappabar> du dv over the chart grid.
double willmore_energy(const SurfaceChart& chart, const GridSpec& grid,
                       int K = 6);

/// Conformal Gauss map diagnostics at one point.
struct ConformalGaussPoint {
  double metric_density = 0.0;    // should equal <kappa, kappabar>
  double kappa_norm2 = 0.0;       // <kappa, kappabar>
  double harmonic_residual = 0.0; // tangential part of G_zzb
  bool degenerate = false;        // umbilic point, metric not formed
};
ConformalGaussPoint conformal_gauss(const FramePoint& fp);

/// Residuals of the integrability system after the substitution
/// kappa -> lambda * kappa (|lambda| = 1), s unchanged.
ResidualReport associated_family_residual(const FramePoint& fp, Complex lambda);

/// Convenience: frame at a chart point, at canonical-lift order K.
FramePoint frame_at_point(const SurfaceChart& chart, double u, double v,
                          int K = 6);

}  // namespace mobius
