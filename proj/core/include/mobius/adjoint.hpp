#pragma once

#include <optional>
#include <string>

#include "mobius/invariants.hpp"

namespace mobius {

/// One point of an adjoint transform of a Willmore surface.
struct AdjointPoint {
  Jet2 mu;            // solution of the co-touching + conformality system
  JetVec eta;         // D_zb kappa + (mubar/2) kappa
  Jet2 theta;         // mu_z - mu^2/2 - s, vanishes for admissible mu
  Jet2 rho;           // mubar_z - 2 <kappa, kappabar>
  Jet2 sigma;         // positive root of sigma^2 = 8<eta,etabar> + |rho|^2
  JetVec Yhat;        // |mu|^2/2 Y + mubar Y_z + mu Y_zb + N
  JetVec Ytilde;      // canonical lift of the adjoint, Yhat / sigma
  JetVec Ntilde;      // closed-form frame vector of the adjoint
  Jet2 mutilde;       // 2 sigma_z / sigma - mu
  Jet2 stilde;        // mutilde_z - mutilde^2/2
  Complex discriminant = 0.0;  // quadratic-branch data (0 otherwise)
  bool masked = false;
  std::string mask_reason;
};

enum class MuBranch { quadratic, swillmore, hill };

struct QuadraticRoots {
  Jet2 root1, root2;   // the two solutions mu (not mubar)
  Complex discriminant;
  bool degenerate = false;  // |<kappa,kappa>| below threshold
};

/// Roots mu of the conformality condition <eta, eta> = 0, which expands to
/// <kappa,kappa>/4 mubar^2 + <D_zb kappa, kappa> mubar + <D_zb kappa, D_zb kappa> = 0.
/// Marks `degenerate` when the quadratic collapses (|<kappa,kappa>| <= eps);
/// callers should then fall back to the S-Willmore / Riccati branches.
QuadraticRoots mu_quadratic(const FramePoint& fp, double eps_deg = 1e-10);

/// S-Willmore branch: mubar = -2 <D_zb kappa, kappabar> / <kappa, kappabar>.
/// Throws std::invalid_argument when D_zb kappa is not parallel to kappa
/// (defect norm in the message) and SingularJetError at umbilic points.
Jet2 mu_swillmore(const FramePoint& fp, double tol = 1e-6);

/// mu = -2 y_z / y from a solution of Hill's equation y_zz + (s/2) y = 0.
/// Throws SingularJetError at zeros of y and std::invalid_argument when y
/// fails the Hill equation beyond `tol`.
Jet2 mu_from_hill(const Jet2& y, const Jet2& s, double tol = 1e-9);

/// Builds the adjoint point from an admissible mu. Points with sigma below
/// `sigma_eps` come back masked instead of throwing.
AdjointPoint adjoint_point(const FramePoint& fp, const Jet2& mu,
                           double tol = 1e-6, double sigma_eps = 1e-7);

/// Quantitative duality-theorem residuals at one point:
///   willmore      Willmore residual of the re-framed adjoint lift
///   rho_dual      |rhotilde - conj(rho)|
///   mutilde_id    |mutilde + mu - 2 sigma_z / sigma|
///   back_theta    |mutilde_z - mutilde^2/2 - stilde(re-framed)|
///   back_conf     |<etatilde, etatilde>| of the backward transform
///   pairing       |<Ytilde, Y> + 1/sigma|
///   stilde_cross  closed-form stilde vs re-framed Schwarzian
///   ntilde_cross  closed-form Ntilde vs re-framed frame vector
ResidualReport duality_check(const FramePoint& fp, const AdjointPoint& ap);

/// mu over a grid with branch labels and masking.
struct MuField {
  GridSpec grid;
  std::vector<Jet2> mu;          // row-major nu*nv
  std::vector<int> branch;       // quadratic: chosen root index; else 0
  std::vector<bool> mask;
  std::vector<Complex> discriminant;
  int masked_count = 0;
};

/// Solves for mu at every grid point. The quadratic branch picks roots by
/// continuity along a serpentine traversal (the only order-dependent step);
/// degenerate quadratics route to the S-Willmore formula. The hill branch
/// uses the constant Hill solution y = 1, valid where s = 0.
MuField solve_mu_field(const SurfaceChart& chart, const GridSpec& grid,
                       MuBranch branch, int K = 9);

}  // namespace mobius
