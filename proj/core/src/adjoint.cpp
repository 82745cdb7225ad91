#include "mobius/adjoint.hpp"

#include <cmath>
#include <sstream>

namespace mobius {

QuadraticRoots mu_quadratic(const FramePoint& fp, double eps_deg) {
  QuadraticRoots out;
  const JetVec Dzbk = normal_D(fp, fp.kappa, Dir::zb);
  const Jet2 a = minkowski(fp.kappa, fp.kappa) * Complex(0.25);
  const Jet2 b = minkowski(Dzbk, fp.kappa);
  const Jet2 c = minkowski(Dzbk, Dzbk);
  if (std::abs(a.value()) <= 0.25 * eps_deg) {
    out.degenerate = true;
    return out;
  }
  const Jet2 disc = b * b - a * c * Complex(4.0);
  out.discriminant = disc.value();
  Jet2 mubar1, mubar2;
  if (std::abs(disc.value()) < kJetDivEps) {
    // Branch-merge point: double root.
    mubar1 = -b / (a * Complex(2.0));
    mubar2 = mubar1;
  } else {
    const Jet2 sq = sqrt(disc);
    mubar1 = (-b + sq) / (a * Complex(2.0));
    mubar2 = (-b - sq) / (a * Complex(2.0));
  }
  out.root1 = conj(mubar1);
  out.root2 = conj(mubar2);
  return out;
}

Jet2 mu_swillmore(const FramePoint& fp, double tol) {
  const Jet2 k2 = minkowski(fp.kappa, jv_conj(fp.kappa));
  if (k2.value().real() < kJetDivEps)
    throw SingularJetError("mu_swillmore: umbilic point (kappa = 0)");
  const JetVec Dzbk = normal_D(fp, fp.kappa, Dir::zb);
  const Jet2 coef = minkowski(Dzbk, jv_conj(fp.kappa)) / k2;
  const double defect =
      herm_norm(jv_sub(Dzbk, jv_scale(fp.kappa, coef.value())));
  if (defect > tol) {
    std::ostringstream msg;
    msg << "mu_swillmore: D_zb kappa not parallel to kappa (defect " << defect
        << ")";
    throw std::invalid_argument(msg.str());
  }
  return conj(coef * Complex(-2.0));
}

Jet2 mu_from_hill(const Jet2& y, const Jet2& s, double tol) {
  if (std::abs(y.value()) < 1e-9)
    throw SingularJetError("mu_from_hill: zero of the Hill solution");
  const Jet2 yz = y.dz();
  const double res = std::abs((yz.dz() + s * y * Complex(0.5)).value());
  if (res > tol) {
    std::ostringstream msg;
    msg << "mu_from_hill: y is not a Hill solution (residual " << res << ")";
    throw std::invalid_argument(msg.str());
  }
  return yz * Complex(-2.0) / y;
}

AdjointPoint adjoint_point(const FramePoint& fp, const Jet2& mu, double tol,
                           double sigma_eps) {
  AdjointPoint ap;
  ap.mu = mu;
  const JetVec Dzbk = normal_D(fp, fp.kappa, Dir::zb);
  ap.eta = jv_add(Dzbk, jv_scale(fp.kappa, conj(mu) * Complex(0.5)));
  ap.theta = mu.dz() - mu * mu * Complex(0.5) - fp.s;
  ap.rho = conj(mu).dz() -
           minkowski(fp.kappa, jv_conj(fp.kappa)) * Complex(2.0);
  if (std::abs(ap.theta.value()) > tol)
    throw std::invalid_argument("adjoint_point: mu is not co-touching");
  if (std::abs(minkowski(ap.eta, ap.eta).value()) > tol)
    throw std::invalid_argument("adjoint_point: mu is not conformal");

  JetVec Yhat = jv_scale(fp.Y, mu * conj(mu) * Complex(0.5));
  Yhat = jv_add(Yhat, jv_scale(fp.Yz, conj(mu)));
  Yhat = jv_add(Yhat, jv_scale(fp.Yzb, mu));
  ap.Yhat = jv_add(Yhat, fp.N);

  const Jet2 sig2 = real_part(minkowski(ap.eta, jv_conj(ap.eta)) * Complex(8.0) +
                              ap.rho * conj(ap.rho));
  if (sig2.value().real() < sigma_eps * sigma_eps) {
    ap.masked = true;
    ap.mask_reason = "sigma below threshold (degenerate adjoint point)";
    return ap;
  }
  ap.sigma = sqrt(sig2);
  ap.Ytilde = jv_div(ap.Yhat, ap.sigma);
  ap.mutilde = ap.sigma.dz() * Complex(2.0) / ap.sigma - mu;
  const JetVec Ytz = jv_dz(ap.Ytilde);
  const JetVec Ytzb = jv_dzb(ap.Ytilde);
  JetVec Nt = jv_scale(ap.Ytilde, ap.mutilde * conj(ap.mutilde) * Complex(-0.5));
  Nt = jv_sub(Nt, jv_scale(Ytzb, ap.mutilde));
  Nt = jv_sub(Nt, jv_scale(Ytz, conj(ap.mutilde)));
  ap.Ntilde = jv_add(Nt, jv_scale(fp.Y, ap.sigma));
  ap.stilde = ap.mutilde.dz() - ap.mutilde * ap.mutilde * Complex(0.5);
  return ap;
}

ResidualReport duality_check(const FramePoint& fp, const AdjointPoint& ap) {
  if (ap.masked)
    throw std::invalid_argument("duality_check: masked adjoint point");
  ResidualReport rep;
  const FramePoint ft = frame_at(ap.Ytilde);

  rep["willmore"] = willmore_residual(ft);

  const Jet2 rhotilde =
      conj(ap.mutilde).dz() -
      minkowski(ft.kappa, jv_conj(ft.kappa)) * Complex(2.0);
  rep["rho_dual"] = std::abs(rhotilde.value() - std::conj(ap.rho.value()));

  rep["mutilde_id"] =
      std::abs((ap.mutilde + ap.mu -
                ap.sigma.dz() * Complex(2.0) / ap.sigma).value());

  rep["back_theta"] = std::abs(
      (ap.mutilde.dz() - ap.mutilde * ap.mutilde * Complex(0.5) - ft.s)
          .value());
  rep["stilde_cross"] = std::abs(ap.stilde.value() - ft.s.value());

  const JetVec Dzbkt = normal_D(ft, ft.kappa, Dir::zb);
  const JetVec etat =
      jv_add(Dzbkt, jv_scale(ft.kappa, conj(ap.mutilde) * Complex(0.5)));
  rep["back_conf"] = std::abs(minkowski(etat, etat).value());

  rep["pairing"] = std::abs(minkowski(ap.Ytilde, fp.Y).value() +
                            1.0 / ap.sigma.value().real());

  rep["ntilde_cross"] =
      herm_norm(jv_value(jv_sub(ap.Ntilde, ft.N)));
  return rep;
}

MuField solve_mu_field(const SurfaceChart& chart, const GridSpec& grid,
                       MuBranch branch, int K) {
  MuField mf;
  mf.grid = grid;
  const int n = grid.nu * grid.nv;
  mf.mu.resize(n);
  mf.branch.assign(n, 0);
  mf.mask.assign(n, false);
  mf.discriminant.assign(n, Complex(0.0));

  const auto us = grid_axis(chart.domain.u0, chart.domain.u1, grid.nu,
                            chart.domain.periodic_u);
  const auto vs = grid_axis(chart.domain.v0, chart.domain.v1, grid.nv,
                            chart.domain.periodic_v);

  bool have_prev = false;
  Complex mu_prev(0.0);
  for (int i = 0; i < grid.nu; ++i) {
    for (int jj = 0; jj < grid.nv; ++jj) {
      // Serpentine traversal keeps consecutive points adjacent, so the
      // continuity criterion for root selection is meaningful.
      const int j = (i % 2 == 0) ? jj : grid.nv - 1 - jj;
      const int idx = i * grid.nv + j;
      try {
        const FramePoint fp = frame_at_point(chart, us[i], vs[j], K);
        switch (branch) {
          case MuBranch::swillmore:
            mf.mu[idx] = mu_swillmore(fp);
            break;
          case MuBranch::hill:
            mf.mu[idx] =
                mu_from_hill(Jet2::constant(1.0, fp.Y[0].order()), fp.s);
            break;
          case MuBranch::quadratic: {
            const QuadraticRoots qr = mu_quadratic(fp);
            if (qr.degenerate) {
              mf.mu[idx] = mu_swillmore(fp);
              mf.branch[idx] = -1;  // routed to the S-Willmore formula
            } else {
              mf.discriminant[idx] = qr.discriminant;
              const Complex r1 = qr.root1.value();
              const Complex r2 = qr.root2.value();
              const bool take2 =
                  have_prev && std::abs(r2 - mu_prev) < std::abs(r1 - mu_prev);
              mf.mu[idx] = take2 ? qr.root2 : qr.root1;
              mf.branch[idx] = take2 ? 1 : 0;
            }
            break;
          }
        }
        mu_prev = mf.mu[idx].value();
        have_prev = true;
      } catch (const std::exception&) {
        mf.mask[idx] = true;
        ++mf.masked_count;
      }
    }
  }
  return mf;
}

}  // namespace mobius
