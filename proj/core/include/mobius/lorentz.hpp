#pragma once

#include <Eigen/Dense>

#include "mobius/jet.hpp"

namespace mobius {

using CVec = std::vector<Complex>;
using RVec = std::vector<double>;

/// Minkowski form on R^{n+1,1}: <y,y> = -y0^2 + sum_i yi^2, extended
/// bilinearly (not Hermitian) to the complexification.
Complex minkowski(const CVec& a, const CVec& b);
double minkowski(const RVec& a, const RVec& b);
Jet2 minkowski(const JetVec& a, const JetVec& b);

/// Hermitian (positive on spacelike vectors) pairing <a, conj b>.
Complex minkowski_herm(const CVec& a, const CVec& b);

/// sqrt|<a, conj a>|; the natural norm for normal-bundle vectors.
double herm_norm(const CVec& a);
inline double herm_norm(const JetVec& a) { return herm_norm(jv_value(a)); }

/// Simple bivector a ^ b stored as its factor pair.
struct Bivector {
  CVec a, b;
};

/// <a^b, c^d> = <a,c><b,d> - <a,d><b,c>.
Complex wedge_inner(const Bivector& p, const Bivector& q);
Jet2 wedge_inner_jet(const JetVec& a, const JetVec& b, const JetVec& c,
                     const JetVec& d);

/// Deterministic pseudo-random element of the restricted Lorentz group
/// SO+(n+1,1), built as exp(eta * S) with S antisymmetric. Seed 0 yields
/// the identity.
Eigen::MatrixXd random_lorentz(unsigned long seed, int n);

CVec apply(const Eigen::MatrixXd& T, const CVec& x);
RVec apply(const Eigen::MatrixXd& T, const RVec& x);
JetVec apply(const Eigen::MatrixXd& T, const JetVec& x);

/// The canonical frame of the 4-space V at one point, as jets.
struct Frame4 {
  JetVec Y, Yz, Yzb, N;
};

/// Sup of the deviations of the frame Gram matrix from its defining
/// relations, evaluated at the base point.
double frame_gram_residual(const Frame4& f);

/// Moebius-invariant splitting of X into its V and V-perp components:
///   tangential = -<X,N>Y - <X,Y>N + 2<X,Yzb>Yz + 2<X,Yz>Yzb.
/// Throws if the frame Gram residual exceeds `tol`.
struct SplitResult {
  JetVec tangential, normal;
};
SplitResult dual_frame_projector(const Frame4& frame, const JetVec& X,
                                 double tol = 1e-8);

}  // namespace mobius
