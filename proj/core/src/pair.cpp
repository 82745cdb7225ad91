#include "mobius/pair.hpp"

#include <cmath>

namespace mobius {

JetVec normalize_pair(const JetVec& Y, const JetVec& Yhat_raw) {
  const Jet2 c = minkowski(Y, Yhat_raw);
  if (std::abs(c.value()) < 1e-9)
    throw std::invalid_argument(
        "normalize_pair: <Y, Yhat> vanishes (coincident points)");
  return jv_div(Yhat_raw, -c);
}

PairPoint pair_invariants(const FramePoint& fp, const JetVec& Yhat) {
  if (std::abs(minkowski(fp.Y, Yhat).value() + 1.0) > 1e-10)
    throw std::invalid_argument("pair_invariants: pair not normalized");
  PairPoint pp;
  pp.mu = minkowski(Yhat, fp.Yz) * Complex(2.0);
  pp.xi = dual_frame_projector(fp.frame(), Yhat).normal;

  const Jet2 k2 = minkowski(fp.kappa, jv_conj(fp.kappa));
  pp.theta = pp.mu.dz() - pp.mu * pp.mu * Complex(0.5) - fp.s -
             minkowski(pp.xi, fp.kappa) * Complex(2.0);
  pp.rho = conj(pp.mu).dz() - k2 * Complex(2.0) +
           minkowski(pp.xi, pp.xi) * Complex(0.5);

  const JetVec Dzbk = normal_D(fp, fp.kappa, Dir::zb);
  JetVec zeta = normal_D(fp, pp.xi, Dir::z);
  zeta = jv_sub(zeta, jv_scale(pp.xi, pp.mu * Complex(0.5)));
  JetVec eta = jv_add(Dzbk, jv_scale(fp.kappa, conj(pp.mu) * Complex(0.5)));
  pp.zeta = jv_add(zeta, jv_scale(eta, Complex(2.0)));
  return pp;
}

std::pair<Complex, Complex> pair_invariants_bivector(const JetVec& Y,
                                                     const JetVec& Yhat) {
  const CVec y = jv_value(Y);
  const CVec yz = jv_value(jv_dz(Y));
  const CVec yzb = jv_value(jv_dzb(Y));
  const CVec h = jv_value(Yhat);
  const CVec hz = jv_value(jv_dz(Yhat));
  const Complex theta = -2.0 * wedge_inner({y, yz}, {h, hz});
  const Complex rho = -2.0 * wedge_inner({y, yzb}, {h, hz});
  return {theta, rho};
}

double pair_reconstruction_residual(const FramePoint& fp, const JetVec& Yhat,
                                    const PairPoint& pp) {
  const Jet2 lam =
      (pp.mu * conj(pp.mu) + minkowski(pp.xi, pp.xi)) * Complex(0.5);
  JetVec rec = jv_scale(fp.Y, lam);
  rec = jv_add(rec, jv_scale(fp.Yz, conj(pp.mu)));
  rec = jv_add(rec, jv_scale(fp.Yzb, pp.mu));
  rec = jv_add(rec, fp.N);
  rec = jv_add(rec, pp.xi);
  return herm_norm(jv_sub(Yhat, rec));
}

namespace {

double rdot(const RVec& a, const RVec& b) { return minkowski(a, b); }

CVec complexify(const RVec& a, const RVec& b, double sb) {
  // a + i*sb*b
  CVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = Complex(a[i], sb * b[i]);
  return r;
}

CVec to_cvec(const RVec& a) {
  CVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = Complex(a[i], 0.0);
  return r;
}

}  // namespace

ContactElement make_contact_element(const RVec& X, const RVec& A,
                                    const RVec& B, double tol) {
  ContactElement ce;
  ce.X = X;
  if (std::abs(rdot(X, X)) > tol)
    throw std::invalid_argument("make_contact_element: base point not null");
  if (std::abs(rdot(X, A)) > tol || std::abs(rdot(X, B)) > tol)
    throw std::invalid_argument(
        "make_contact_element: tangent vectors not orthogonal to base point");
  const double na = std::sqrt(rdot(A, A));
  if (!(na > tol))
    throw std::invalid_argument("make_contact_element: degenerate tangent pair");
  ce.X1.resize(A.size());
  for (size_t i = 0; i < A.size(); ++i) ce.X1[i] = A[i] / na;
  RVec B2(B.size());
  const double p = rdot(B, ce.X1);
  for (size_t i = 0; i < B.size(); ++i) B2[i] = B[i] - p * ce.X1[i];
  const double nb = std::sqrt(rdot(B2, B2));
  if (!(nb > tol))
    throw std::invalid_argument("make_contact_element: degenerate tangent pair");
  ce.X2.resize(B2.size());
  for (size_t i = 0; i < B2.size(); ++i) ce.X2[i] = B2[i] / nb;
  return ce;
}

ContactElement contact_element_at(const FramePoint& fp) {
  const Complex I(0.0, 1.0);
  RVec X(fp.Y.size()), A(fp.Y.size()), B(fp.Y.size());
  for (size_t i = 0; i < fp.Y.size(); ++i) {
    X[i] = fp.Y[i].value().real();
    const Complex z = fp.Yz[i].value();
    A[i] = 2.0 * z.real();   // Y_u
    B[i] = -2.0 * z.imag();  // Y_v
  }
  return make_contact_element(X, A, B);
}

std::pair<Complex, Complex> contact_invariants_distinct(
    const ContactElement& S, const ContactElement& Shat) {
  const double pairing = rdot(S.X, Shat.X);
  if (std::abs(pairing) < 1e-9)
    throw std::invalid_argument(
        "contact_invariants_distinct: common base point; use "
        "contact_invariants_samepoint");
  const CVec x = to_cvec(S.X);
  const CVec xh = to_cvec(Shat.X);
  const CVec wm = complexify(S.X1, S.X2, -1.0);   // X1 - i X2
  const CVec wp = complexify(S.X1, S.X2, +1.0);   // X1 + i X2
  const CVec whm = complexify(Shat.X1, Shat.X2, -1.0);
  const Complex den = wedge_inner({x, xh}, {x, xh});
  const Complex theta = 0.5 * wedge_inner({x, wm}, {xh, whm}) / den;
  const Complex rho = 0.5 * wedge_inner({x, wp}, {xh, whm}) / den;
  return {theta, rho};
}

std::pair<Complex, Complex> contact_invariants_samepoint(
    const ContactElement& S, const ContactElement& Shat) {
  const CVec wp = complexify(S.X1, S.X2, +1.0);
  const CVec wm = complexify(S.X1, S.X2, -1.0);
  const CVec whm = complexify(Shat.X1, Shat.X2, -1.0);
  const Complex theta_u = 0.5 * minkowski(wp, whm);
  const Complex rho_u = 0.5 * minkowski(wm, whm);
  return {theta_u, rho_u};
}

TouchFlags touch_predicates(const ContactElement& S, const ContactElement& Shat,
                            double tol) {
  const auto [theta_u, rho_u] = contact_invariants_samepoint(S, Shat);
  TouchFlags f;
  f.touch = std::abs(rho_u) < tol;
  f.cotouch = std::abs(theta_u) < tol;
  return f;
}

std::pair<double, double> tangent_sphere_check(const FramePoint& fp,
                                               const JetVec& Yhat,
                                               const PairPoint& pp) {
  if (std::abs(minkowski(fp.Y, Yhat).value() + 1.0) > 1e-8)
    throw std::invalid_argument("tangent_sphere_check: pair not normalized");
  // Reflecting the sphere Span{Y, Y_u, Y_v, Yhat} across Y - Yhat carries
  // the contact element at Y to the one the sphere induces at Yhat, with
  // complex tangent Y_zb + (mubar/2) Y; pair it against Yhat's own element.
  const JetVec w =
      jv_add(fp.Yzb, jv_scale(fp.Y, conj(pp.mu) * Complex(0.5)));
  const JetVec wbar =
      jv_add(fp.Yz, jv_scale(fp.Y, pp.mu * Complex(0.5)));
  const CVec hz = jv_value(jv_dz(Yhat));
  const Complex theta_u = 2.0 * minkowski(jv_value(wbar), hz);
  const Complex rho_u = 2.0 * minkowski(jv_value(w), hz);
  return {std::abs(theta_u - pp.theta.value()),
          std::abs(rho_u - pp.rho.value())};
}

}  // namespace mobius
