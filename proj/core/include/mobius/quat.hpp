#pragma once

#include <array>

#include "mobius/pair.hpp"

namespace mobius {

/// Quaternion q = w + x i + y j + z k, identified with R^4 as
/// (w, x, y, z) <-> (1, i, j, k); this order is the positive orientation.
struct Quaternion {
  double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

  static Quaternion from_array(const std::array<double, 4>& a) {
    return {a[0], a[1], a[2], a[3]};
  }
  std::array<double, 4> to_array() const { return {w, x, y, z}; }

  Quaternion conjugate() const { return {w, -x, -y, -z}; }
  double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const;
  double dot(const Quaternion& o) const {
    return w * o.w + x * o.x + y * o.y + z * o.z;
  }
};

Quaternion operator+(const Quaternion& a, const Quaternion& b);
Quaternion operator-(const Quaternion& a, const Quaternion& b);
Quaternion operator*(const Quaternion& a, const Quaternion& b);
Quaternion operator*(double s, const Quaternion& a);

/// An oriented 2-plane in R^4 given by an ordered orthonormal basis.
struct OrientedPlane4 {
  Quaternion a, b;
};

/// Builds a plane from any ordered spanning pair (Gram-Schmidt).
OrientedPlane4 make_plane(const Quaternion& a_raw, const Quaternion& b_raw,
                          double tol = 1e-10);

/// The unique pair of unit imaginary quaternions (N, R) with
/// N x = -x R for all x in the plane, signed so that N a = b.
/// Solved from the 8x6 linear system on (Im N, Im R); throws when the
/// solution space is not 1-dimensional.
std::pair<Quaternion, Quaternion> normals_of_plane(const OrientedPlane4& U);

/// The oriented solution plane of N x = -x R; inverse of normals_of_plane.
/// Throws std::invalid_argument unless N, R are unit imaginary.
OrientedPlane4 plane_from_normals(const Quaternion& N, const Quaternion& R,
                                  double tol = 1e-10);

struct LRTouch {
  bool left_touch = false;    // N1 = N2
  bool right_touch = false;   // R1 = R2
  bool left_cotouch = false;  // N1 = -N2
  bool right_cotouch = false; // R1 = -R2
};
LRTouch lr_touch(const OrientedPlane4& U1, const OrientedPlane4& U2,
                 double tol = 1e-9);

/// Same-point contact-element invariants of two planes through the origin
/// of R^4, embedded in the light-cone model at the lift of 0.
std::pair<Complex, Complex> plane_invariants(const OrientedPlane4& U1,
                                             const OrientedPlane4& U2);

/// Signed singular values of the inter-plane Gram matrix; touch iff
/// lambda1 = lambda2, co-touch iff lambda1 = -lambda2.
std::pair<double, double> signed_singular_values(const OrientedPlane4& U1,
                                                 const OrientedPlane4& U2);

/// Checks, on the given pair and `trials` random pairs, that the
/// quaternionic left/right (co-)touch predicates, the theta/rho contact
/// invariants, and the signed-singular-value criterion classify touching
/// identically. Reports disagreement counts.
ResidualReport equivalence_check(const OrientedPlane4& U1,
                                 const OrientedPlane4& U2, int trials,
                                 unsigned long seed = 1,
                                 double tol = 1e-8);

}  // namespace mobius
