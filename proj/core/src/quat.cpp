#include "mobius/quat.hpp"

#include <cmath>
#include <random>

#include <Eigen/Dense>

namespace mobius {

double Quaternion::norm() const { return std::sqrt(norm2()); }

Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}
Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}
Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}
Quaternion operator*(double s, const Quaternion& a) {
  return {s * a.w, s * a.x, s * a.y, s * a.z};
}

OrientedPlane4 make_plane(const Quaternion& a_raw, const Quaternion& b_raw,
                          double tol) {
  const double na = a_raw.norm();
  if (!(na > tol)) throw std::invalid_argument("make_plane: degenerate basis");
  OrientedPlane4 U;
  U.a = (1.0 / na) * a_raw;
  Quaternion b2 = b_raw - b_raw.dot(U.a) * U.a;
  const double nb = b2.norm();
  if (!(nb > tol)) throw std::invalid_argument("make_plane: degenerate basis");
  U.b = (1.0 / nb) * b2;
  return U;
}

std::pair<Quaternion, Quaternion> normals_of_plane(const OrientedPlane4& U) {
  // Unknowns: the imaginary parts (n1,n2,n3,r1,r2,r3); equations:
  // N x + x R = 0 for x = a and x = b.
  const Quaternion units[3] = {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  Eigen::MatrixXd M(8, 6);
  const Quaternion xs[2] = {U.a, U.b};
  for (int e = 0; e < 2; ++e)
    for (int c = 0; c < 3; ++c) {
      const auto nc = (units[c] * xs[e]).to_array();
      const auto rc = (xs[e] * units[c]).to_array();
      for (int r = 0; r < 4; ++r) {
        M(4 * e + r, c) = nc[r];
        M(4 * e + r, 3 + c) = rc[r];
      }
    }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (!(sv(4) > 1e-8 * sv(0)))
    throw std::runtime_error(
        "normals_of_plane: solution space not 1-dimensional");
  const Eigen::VectorXd v = svd.matrixV().col(5);
  Quaternion N{0.0, v(0), v(1), v(2)};
  Quaternion R{0.0, v(3), v(4), v(5)};
  const double s = 1.0 / N.norm();
  N = s * N;
  R = s * R;
  // Sign: {a, N a} must agree with the plane's orientation, i.e. N a = b.
  if ((N * U.a).dot(U.b) < 0.0) {
    N = -1.0 * N;
    R = -1.0 * R;
  }
  return {N, R};
}

OrientedPlane4 plane_from_normals(const Quaternion& N, const Quaternion& R,
                                  double tol) {
  if (std::abs(N.w) > tol || std::abs(R.w) > tol ||
      std::abs(N.norm() - 1.0) > tol || std::abs(R.norm() - 1.0) > tol)
    throw std::invalid_argument(
        "plane_from_normals: normals must be unit imaginary");
  Eigen::MatrixXd M(4, 4);
  const Quaternion units[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0},
                               {0, 0, 0, 1}};
  for (int c = 0; c < 4; ++c) {
    const auto col = (N * units[c] + units[c] * R).to_array();
    for (int r = 0; r < 4; ++r) M(r, c) = col[r];
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (!(sv(1) > 1e-8) || sv(2) > 1e-8 * std::max(sv(0), 1.0))
    throw std::invalid_argument(
        "plane_from_normals: solution space is not a 2-plane");
  Eigen::Vector4d av = svd.matrixV().col(3);
  const Quaternion a{av(0), av(1), av(2), av(3)};
  return {a, N * a};
}

LRTouch lr_touch(const OrientedPlane4& U1, const OrientedPlane4& U2,
                 double tol) {
  const auto [N1, R1] = normals_of_plane(U1);
  const auto [N2, R2] = normals_of_plane(U2);
  LRTouch f;
  f.left_touch = (N1 - N2).norm() < tol;
  f.right_touch = (R1 - R2).norm() < tol;
  f.left_cotouch = (N1 + N2).norm() < tol;
  f.right_cotouch = (R1 + R2).norm() < tol;
  return f;
}

namespace {

ContactElement embed_plane(const OrientedPlane4& U) {
  // Light-cone lift of v in R^4: ((1+|v|^2)/2, (1-|v|^2)/2, v); at v = 0
  // the tangent directions are just (0, 0, e).
  RVec X = {0.5, 0.5, 0.0, 0.0, 0.0, 0.0};
  RVec A(6, 0.0), B(6, 0.0);
  const auto a = U.a.to_array();
  const auto b = U.b.to_array();
  for (int i = 0; i < 4; ++i) {
    A[2 + i] = a[i];
    B[2 + i] = b[i];
  }
  return make_contact_element(X, A, B);
}

}  // namespace

std::pair<Complex, Complex> plane_invariants(const OrientedPlane4& U1,
                                             const OrientedPlane4& U2) {
  return contact_invariants_samepoint(embed_plane(U1), embed_plane(U2));
}

std::pair<double, double> signed_singular_values(const OrientedPlane4& U1,
                                                 const OrientedPlane4& U2) {
  Eigen::Matrix2d M;
  M << U1.a.dot(U2.a), U1.a.dot(U2.b), U1.b.dot(U2.a), U1.b.dot(U2.b);
  const Eigen::JacobiSVD<Eigen::Matrix2d> svd(M);
  const double s1 = svd.singularValues()(0);
  const double s2 = svd.singularValues()(1);
  return {s1, M.determinant() >= 0.0 ? s2 : -s2};
}

ResidualReport equivalence_check(const OrientedPlane4& U1,
                                 const OrientedPlane4& U2, int trials,
                                 unsigned long seed, double tol) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto random_plane = [&]() {
    while (true) {
      Quaternion p{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
      Quaternion q{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
      try {
        return make_plane(p, q);
      } catch (const std::invalid_argument&) {
      }
    }
  };

  int touch_dis = 0, cotouch_dis = 0, sv_dis = 0;
  for (int t = 0; t <= trials; ++t) {
    OrientedPlane4 A = (t == 0) ? U1 : random_plane();
    OrientedPlane4 B = (t == 0) ? U2 : random_plane();
    const LRTouch f = lr_touch(A, B, tol);
    const auto [theta_u, rho_u] = plane_invariants(A, B);
    const auto [l1, l2] = signed_singular_values(A, B);
    const bool touch_q = f.left_touch || f.right_touch;
    const bool cotouch_q = f.left_cotouch || f.right_cotouch;
    const bool touch_c = std::abs(rho_u) < tol;
    const bool cotouch_c = std::abs(theta_u) < tol;
    const bool touch_s = std::abs(l1 - l2) < tol;
    const bool cotouch_s = std::abs(l1 + l2) < tol;
    if (touch_q != touch_c) ++touch_dis;
    if (cotouch_q != cotouch_c) ++cotouch_dis;
    if (touch_s != touch_c || cotouch_s != cotouch_c) ++sv_dis;
  }
  ResidualReport rep;
  rep["trials"] = static_cast<double>(trials + 1);
  rep["touch_disagreements"] = static_cast<double>(touch_dis);
  rep["cotouch_disagreements"] = static_cast<double>(cotouch_dis);
  rep["sv_disagreements"] = static_cast<double>(sv_dis);
  rep["disagreements"] =
      static_cast<double>(touch_dis + cotouch_dis + sv_dis);
  return rep;
}

}  // namespace mobius
