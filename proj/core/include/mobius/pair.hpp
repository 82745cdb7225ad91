#pragma once

#include <utility>

#include "mobius/invariants.hpp"

namespace mobius {

/// Second-order invariants of an ordered pair of conformal immersions
/// with lifts Y (canonical) and Yhat (normalized against Y).
struct PairPoint {
  Jet2 mu;     // 2 <Yhat, Y_z>
  JetVec xi;   // normal component of Yhat
  Jet2 theta;  // (2,0)-form coefficient
  Jet2 rho;    // (1,1)-form coefficient
  JetVec zeta; // normal-valued remainder of Yhat_z
};

/// An oriented 2-dim contact element: a null base point X together with an
/// ordered orthonormal pair X1, X2 spanning the tangent plane. The scale of
/// X is part of the data (it matters for the distinct-point invariants).
struct ContactElement {
  RVec X;
  RVec X1, X2;
};

/// Scales Yhat_raw so that <Y, Yhat> = -1 as a jet identity.
/// Throws std::invalid_argument when the pairing (nearly) vanishes, i.e.
/// the two maps pass through the same point.
JetVec normalize_pair(const JetVec& Y, const JetVec& Yhat_raw);

/// mu, xi, theta, rho, zeta of a normalized pair, from the fundamental
/// equation of the pair:
///   theta = mu_z - mu^2/2 - s - 2<xi, kappa>,
///   rho   = mubar_z - 2<kappa, kappabar> + <xi, xi>/2,
///   zeta  = D_z xi - (mu/2) xi + 2 (D_zb kappa + (mubar/2) kappa).
PairPoint pair_invariants(const FramePoint& fp, const JetVec& Yhat);

/// The same theta, rho through bivector pairings of the complex contact
/// elements Y ^ Y_z and Yhat ^ Yhat_z; an independent computation path.
std::pair<Complex, Complex> pair_invariants_bivector(const JetVec& Y,
                                                     const JetVec& Yhat);

/// Residual of the defining reconstruction
/// Yhat = (|mu|^2 + <xi,xi>)/2 Y + mubar Y_z + mu Y_zb + N + xi.
double pair_reconstruction_residual(const FramePoint& fp, const JetVec& Yhat,
                                    const PairPoint& pp);

/// Builds a contact element from a base point and any oriented spanning
/// pair of its tangent plane; Gram-Schmidt enforces Gram diag(0,1,1)
/// keeping the orientation.
ContactElement make_contact_element(const RVec& X, const RVec& A,
                                    const RVec& B, double tol = 1e-8);

/// The contact element carried by a surface at one point, frames taken
/// from the canonical-lift jets (X1 = Y_u, X2 = Y_v).
ContactElement contact_element_at(const FramePoint& fp);

/// theta, rho of two contact elements at distinct points:
///   theta = <X ^ (X1 - i X2), Xh ^ (Xh1 - i Xh2)> / (2 <X^Xh, X^Xh>),
/// rho analogous with X1 + i X2 in the first slot.
/// Throws std::invalid_argument at a common base point.
std::pair<Complex, Complex> contact_invariants_distinct(
    const ContactElement& S, const ContactElement& Shat);

/// Same-point invariants of two tangent planes:
///   theta_u = <X1 + i X2, Xh1 - i Xh2> / 2,
///   rho_u   = <X1 - i X2, Xh1 - i Xh2> / 2.
std::pair<Complex, Complex> contact_invariants_samepoint(
    const ContactElement& S, const ContactElement& Shat);

struct TouchFlags {
  bool touch = false;    // rho_u = 0
  bool cotouch = false;  // theta_u = 0
};
TouchFlags touch_predicates(const ContactElement& S, const ContactElement& Shat,
                            double tol = 1e-8);

/// The tangent-sphere identity: the contact element induced at Yhat by the
/// 2-sphere Span{Y, Y_u, Y_v, Yhat} pairs with Yhat's own element to
/// exactly (theta, rho). Returns (|theta_u - theta|, |rho_u - rho|).
std::pair<double, double> tangent_sphere_check(const FramePoint& fp,
                                               const JetVec& Yhat,
                                               const PairPoint& pp);

}  // namespace mobius
