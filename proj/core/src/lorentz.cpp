#include "mobius/lorentz.hpp"

#include <cmath>
#include <random>

#include <unsupported/Eigen/MatrixFunctions>

namespace mobius {

Complex minkowski(const CVec& a, const CVec& b) {
  if (a.size() != b.size() || a.size() < 2)
    throw std::invalid_argument("minkowski: dimension mismatch");
  Complex s = -a[0] * b[0];
  for (size_t i = 1; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double minkowski(const RVec& a, const RVec& b) {
  if (a.size() != b.size() || a.size() < 2)
    throw std::invalid_argument("minkowski: dimension mismatch");
  double s = -a[0] * b[0];
  for (size_t i = 1; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Jet2 minkowski(const JetVec& a, const JetVec& b) {
  if (a.size() != b.size() || a.size() < 2)
    throw std::invalid_argument("minkowski: dimension mismatch");
  Jet2 s = -(a[0] * b[0]);
  for (size_t i = 1; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Complex minkowski_herm(const CVec& a, const CVec& b) {
  CVec bc(b.size());
  for (size_t i = 0; i < b.size(); ++i) bc[i] = std::conj(b[i]);
  return minkowski(a, bc);
}

double herm_norm(const CVec& a) {
  return std::sqrt(std::abs(minkowski_herm(a, a).real()));
}

Complex wedge_inner(const Bivector& p, const Bivector& q) {
  return minkowski(p.a, q.a) * minkowski(p.b, q.b) -
         minkowski(p.a, q.b) * minkowski(p.b, q.a);
}

Jet2 wedge_inner_jet(const JetVec& a, const JetVec& b, const JetVec& c,
                     const JetVec& d) {
  return minkowski(a, c) * minkowski(b, d) - minkowski(a, d) * minkowski(b, c);
}

Eigen::MatrixXd random_lorentz(unsigned long seed, int n) {
  const int dim = n + 2;
  if (seed == 0) return Eigen::MatrixXd::Identity(dim, dim);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, 0.25);
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      const double x = dist(rng);
      S(i, j) = x;
      S(j, i) = -x;
    }
  Eigen::VectorXd eta = Eigen::VectorXd::Ones(dim);
  eta(0) = -1.0;
  Eigen::MatrixXd A = eta.asDiagonal() * S;  // eta*S lies in so(n+1,1)
  return A.exp();
}

CVec apply(const Eigen::MatrixXd& T, const CVec& x) {
  if (T.cols() != static_cast<long>(x.size()))
    throw std::invalid_argument("apply: dimension mismatch");
  CVec r(x.size(), Complex(0.0));
  for (long i = 0; i < T.rows(); ++i)
    for (long j = 0; j < T.cols(); ++j) r[i] += T(i, j) * x[j];
  return r;
}

RVec apply(const Eigen::MatrixXd& T, const RVec& x) {
  RVec r(x.size(), 0.0);
  for (long i = 0; i < T.rows(); ++i)
    for (long j = 0; j < T.cols(); ++j) r[i] += T(i, j) * x[j];
  return r;
}

JetVec apply(const Eigen::MatrixXd& T, const JetVec& x) {
  if (T.cols() != static_cast<long>(x.size()))
    throw std::invalid_argument("apply: dimension mismatch");
  const int K = x.empty() ? 0 : x[0].order();
  JetVec r(x.size(), Jet2(K));
  for (long i = 0; i < T.rows(); ++i) {
    Jet2 acc(K);
    for (long j = 0; j < T.cols(); ++j) acc += x[j] * Complex(T(i, j));
    r[i] = acc;
  }
  return r;
}

double frame_gram_residual(const Frame4& f) {
  const Complex yy = minkowski(f.Y, f.Y).value();
  const Complex nn = minkowski(f.N, f.N).value();
  const Complex yn = minkowski(f.Y, f.N).value();
  const Complex zz = minkowski(f.Yz, f.Yz).value();
  const Complex zzb = minkowski(f.Yz, f.Yzb).value();
  const Complex yyz = minkowski(f.Y, f.Yz).value();
  const Complex nyz = minkowski(f.N, f.Yz).value();
  double r = 0.0;
  r = std::max(r, std::abs(yy));
  r = std::max(r, std::abs(nn));
  r = std::max(r, std::abs(yn + 1.0));
  r = std::max(r, std::abs(zz));
  r = std::max(r, std::abs(zzb - 0.5));
  r = std::max(r, std::abs(yyz));
  r = std::max(r, std::abs(nyz));
  return r;
}

SplitResult dual_frame_projector(const Frame4& frame, const JetVec& X,
                                 double tol) {
  if (frame_gram_residual(frame) > tol)
    throw std::runtime_error("dual_frame_projector: frame Gram residual above tolerance");
  const Jet2 xn = minkowski(X, frame.N);
  const Jet2 xy = minkowski(X, frame.Y);
  const Jet2 xzb = minkowski(X, frame.Yzb);
  const Jet2 xz = minkowski(X, frame.Yz);
  JetVec tang = jv_scale(frame.Y, -xn);
  tang = jv_add(tang, jv_scale(frame.N, -xy));
  tang = jv_add(tang, jv_scale(frame.Yz, xzb * Complex(2.0)));
  tang = jv_add(tang, jv_scale(frame.Yzb, xz * Complex(2.0)));
  // Truncate X to the tangential part's order before subtracting.
  const int K = tang.empty() ? 0 : tang[0].order();
  JetVec norm(X.size());
  for (size_t i = 0; i < X.size(); ++i) norm[i] = X[i].truncated(std::min(K, X[i].order())) - tang[i];
  return {std::move(tang), std::move(norm)};
}

}  // namespace mobius
