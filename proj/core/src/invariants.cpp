#include "mobius/invariants.hpp"

#include <cmath>

#include "mobius/multivector.hpp"

namespace mobius {

void report_max(ResidualReport& into, const ResidualReport& point) {
  for (const auto& [k, v] : point) {
    auto it = into.find(k);
    if (it == into.end())
      into[k] = v;
    else
      it->second = std::max(it->second, v);
  }
}

namespace {

double value_norm(const JetVec& a) { return herm_norm(jv_value(a)); }

JetVec imag_vec(const JetVec& a) {
  JetVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = imag_part(a[i]);
  return r;
}

}  // namespace

FramePoint frame_at(const JetVec& Y, double tol) {
  if (Y.empty() || Y[0].order() < 4)
    throw std::invalid_argument("frame_at: need a canonical-lift jet of order >= 4");
  FramePoint fp;
  fp.ambient_n = static_cast<int>(Y.size()) - 2;
  fp.Y = Y;
  fp.Yz = jv_dz(Y);
  fp.Yzb = jv_dzb(Y);
  const JetVec Yzz = jv_dz(fp.Yz);
  const JetVec Yzzb = jv_dzb(fp.Yz);
  const Jet2 a = minkowski(Yzzb, Yzzb);
  fp.N = jv_add(jv_scale(Yzzb, Complex(2.0)), jv_scale(Y, a * Complex(2.0)));
  fp.s = minkowski(Yzz, fp.N) * Complex(2.0);
  fp.kappa = jv_add(Yzz, jv_scale(Y, fp.s * Complex(0.5)));

  const double gram = frame_gram_residual(fp.frame());
  if (gram > tol)
    throw std::runtime_error("frame_at: frame Gram residual above tolerance");

  // Orthonormal basis of the normal space, by Gram-Schmidt on the
  // projected coordinate directions.
  const int dim = fp.ambient_n + 2;
  const Frame4 fr = fp.frame();
  for (int i = 0; i < dim && static_cast<int>(fp.normal_basis.size()) <
                                 fp.ambient_n - 2;
       ++i) {
    std::vector<double> e(dim, 0.0);
    e[i] = 1.0;
    JetVec psi = dual_frame_projector(fr, jv_constant(e, Y[0].order()), tol).normal;
    for (const auto& b : fp.normal_basis)
      psi = jv_sub(psi, jv_scale(b, minkowski(psi, b)));
    const Jet2 n2 = real_part(minkowski(psi, psi));
    if (n2.value().real() > 1e-3)
      fp.normal_basis.push_back(jv_div(psi, sqrt(n2)));
  }
  if (static_cast<int>(fp.normal_basis.size()) != fp.ambient_n - 2)
    throw std::runtime_error("frame_at: failed to build a normal basis");
  return fp;
}

JetVec normal_D(const FramePoint& fp, const JetVec& psi, Dir dir, double tol) {
  const Frame4 fr = fp.frame();
  const CVec p = jv_value(psi);
  double dev = 0.0;
  dev = std::max(dev, std::abs(minkowski(p, jv_value(fp.Y))));
  dev = std::max(dev, std::abs(minkowski(p, jv_value(fp.Yz))));
  dev = std::max(dev, std::abs(minkowski(p, jv_value(fp.Yzb))));
  dev = std::max(dev, std::abs(minkowski(p, jv_value(fp.N))));
  if (dev > tol)
    throw std::invalid_argument("normal_D: field is not normal at this point");
  const JetVec dpsi = (dir == Dir::z) ? jv_dz(psi) : jv_dzb(psi);
  return dual_frame_projector(fr, dpsi, tol).normal;
}

ResidualReport structure_residuals(const FramePoint& fp) {
  ResidualReport rep;
  const JetVec Yzz = jv_dz(fp.Yz);
  const JetVec Yzzb = jv_dzb(fp.Yz);
  const Jet2 k2 = minkowski(fp.kappa, jv_conj(fp.kappa));

  rep["nullity"] = std::abs(minkowski(fp.Y, fp.Y).value());
  rep["conformality"] = std::abs(minkowski(fp.Yz, fp.Yz).value());
  rep["normalization"] = std::abs(minkowski(fp.Yz, fp.Yzb).value() - 0.5);

  // Hill decomposition: kappa orthogonal to the whole frame.
  double hill = frame_gram_residual(fp.frame());
  const CVec kv = jv_value(fp.kappa);
  hill = std::max(hill, std::abs(minkowski(kv, jv_value(fp.Y))));
  hill = std::max(hill, std::abs(minkowski(kv, jv_value(fp.Yz))));
  hill = std::max(hill, std::abs(minkowski(kv, jv_value(fp.Yzb))));
  hill = std::max(hill, std::abs(minkowski(kv, jv_value(fp.N))));
  rep["hill"] = hill;

  // Structure rows for Y_zz and Y_zzb (identically satisfied by the frame
  // construction; kept as jet-consistency checks).
  {
    JetVec r = jv_add(Yzz, jv_scale(fp.Y, fp.s * Complex(0.5)));
    r = jv_sub(r, fp.kappa);
    rep["structure_yzz"] = value_norm(r);
    JetVec r2 = jv_add(Yzzb, jv_scale(fp.Y, k2));
    r2 = jv_sub(r2, jv_scale(fp.N, Complex(0.5)));
    rep["structure_yzzb"] = value_norm(r2);
  }

  const JetVec Dzbk = normal_D(fp, fp.kappa, Dir::zb);
  const JetVec Dzk = normal_D(fp, fp.kappa, Dir::z);
  const JetVec kbar = jv_conj(fp.kappa);
  const JetVec Dzkbar = normal_D(fp, kbar, Dir::z);

  // N_z = -2<k,kb> Y_z - s Y_zb + 2 D_zb kappa
  {
    JetVec rhs = jv_scale(fp.Yz, k2 * Complex(-2.0));
    rhs = jv_sub(rhs, jv_scale(fp.Yzb, fp.s));
    rhs = jv_add(rhs, jv_scale(Dzbk, Complex(2.0)));
    rep["structure_n"] = value_norm(jv_sub(jv_dz(fp.N), rhs));
  }

  // psi_z = D_z psi + 2<psi, D_zb kappa> Y - 2<psi, kappa> Y_zb
  {
    double worst = 0.0;
    for (const auto& psi : fp.normal_basis) {
      JetVec rhs = normal_D(fp, psi, Dir::z);
      rhs = jv_add(rhs, jv_scale(fp.Y, minkowski(psi, Dzbk) * Complex(2.0)));
      rhs = jv_sub(rhs, jv_scale(fp.Yzb, minkowski(psi, fp.kappa) * Complex(2.0)));
      worst = std::max(worst, value_norm(jv_sub(jv_dz(psi), rhs)));
    }
    rep["structure_psi"] = worst;
  }

  // Gauss: s_zb/2 = 3<D_z kbar, kappa> + <kbar, D_z kappa>
  {
    const Complex lhs = 0.5 * fp.s.dzb().value();
    const Complex rhs = 3.0 * minkowski(Dzkbar, fp.kappa).value() +
                        minkowski(kbar, Dzk).value();
    rep["gauss"] = std::abs(lhs - rhs);
  }

  // Codazzi: Im(D_zb D_zb kappa + (sbar/2) kappa) = 0
  {
    JetVec w = normal_D(fp, Dzbk, Dir::zb);
    w = jv_add(w, jv_scale(fp.kappa, conj(fp.s) * Complex(0.5)));
    rep["codazzi"] = value_norm(imag_vec(w));
  }

  // Ricci: D_zb D_z psi - D_z D_zb psi = 2<psi,k>kb - 2<psi,kb>k
  {
    double worst = 0.0;
    for (const auto& psi : fp.normal_basis) {
      JetVec lhs = jv_sub(normal_D(fp, normal_D(fp, psi, Dir::z), Dir::zb),
                          normal_D(fp, normal_D(fp, psi, Dir::zb), Dir::z));
      JetVec rhs = jv_scale(kbar, minkowski(psi, fp.kappa) * Complex(2.0));
      rhs = jv_sub(rhs, jv_scale(fp.kappa, minkowski(psi, kbar) * Complex(2.0)));
      worst = std::max(worst, value_norm(jv_sub(lhs, rhs)));
    }
    rep["ricci"] = worst;
  }

  rep["willmore"] = willmore_residual(fp);
  return rep;
}

double willmore_residual(const FramePoint& fp) {
  const JetVec Dzbk = normal_D(fp, fp.kappa, Dir::zb);
  JetVec w = normal_D(fp, Dzbk, Dir::zb);
  w = jv_add(w, jv_scale(fp.kappa, conj(fp.s) * Complex(0.5)));
  return value_norm(w);
}

double willmore_energy(const SurfaceChart& chart, const GridSpec& grid, int K) {
  const auto us = grid_axis(chart.domain.u0, chart.domain.u1, grid.nu,
                            chart.domain.periodic_u);
  const auto vs = grid_axis(chart.domain.v0, chart.domain.v1, grid.nv,
                            chart.domain.periodic_v);
  std::vector<std::vector<double>> vals(grid.nu, std::vector<double>(grid.nv));
  for (int i = 0; i < grid.nu; ++i)
    for (int j = 0; j < grid.nv; ++j) {
      const FramePoint fp = frame_at_point(chart, us[i], vs[j], K);
      vals[i][j] =
          minkowski(fp.kappa, jv_conj(fp.kappa)).value().real();
    }
  return integrate_grid(vals, chart.domain, grid);
}

ConformalGaussPoint conformal_gauss(const FramePoint& fp) {
  ConformalGaussPoint out;
  out.kappa_norm2 = minkowski(fp.kappa, jv_conj(fp.kappa)).value().real();
  out.degenerate = out.kappa_norm2 < 1e-12;

  const Complex I(0.0, 1.0);
  JetVec Yu = jv_add(fp.Yz, fp.Yzb);
  JetVec Yv = jv_scale(jv_sub(fp.Yz, fp.Yzb), I);
  std::vector<JetVec> slots = {fp.Y, Yu, Yv, fp.N};

  std::vector<CVec> s0, sz, szb, szzb;
  for (const auto& S : slots) {
    s0.push_back(jv_value(S));
    sz.push_back(jv_value(jv_dz(S)));
    szb.push_back(jv_value(jv_dzb(S)));
    szzb.push_back(jv_value(jv_dzb(jv_dz(S))));
  }

  const int dim = fp.ambient_n + 2;
  MultiVector Gz(dim, 4), Gzb(dim, 4), Gzzb(dim, 4);
  for (int i = 0; i < 4; ++i) {
    auto fz = s0;
    fz[i] = sz[i];
    Gz += MultiVector::from_wedge(fz);
    auto fzb = s0;
    fzb[i] = szb[i];
    Gzb += MultiVector::from_wedge(fzb);
    auto f2 = s0;
    f2[i] = szzb[i];
    Gzzb += MultiVector::from_wedge(f2);
    for (int j = 0; j < 4; ++j) {
      if (j == i) continue;
      auto fm = s0;
      fm[i] = sz[i];
      fm[j] = szb[j];
      Gzzb += MultiVector::from_wedge(fm);
    }
  }

  if (!out.degenerate)
    out.metric_density = -0.5 * mv_inner(Gz, Gzb).real();

  // Tangent space of the Grassmannian at G: each frame slot replaced by a
  // normal direction. Project G_zzb there; the norm of the projection is
  // the harmonicity defect.
  const int nb = fp.ambient_n - 2;
  const int tdim = 4 * nb;
  std::vector<MultiVector> basis;
  basis.reserve(tdim);
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < nb; ++k) {
      auto f = s0;
      f[i] = jv_value(fp.normal_basis[k]);
      basis.push_back(MultiVector::from_wedge(f));
    }
  Eigen::MatrixXd M(tdim, tdim);
  Eigen::VectorXcd b(tdim);
  for (int i = 0; i < tdim; ++i) {
    b(i) = mv_inner(basis[i], Gzzb);
    for (int j = 0; j < tdim; ++j)
      M(i, j) = mv_inner(basis[i], basis[j]).real();
  }
  const Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
  const Eigen::VectorXcd c =
      lu.solve(b.real().eval().cast<std::complex<double>>()) +
      Complex(0.0, 1.0) * lu.solve(b.imag().eval().cast<std::complex<double>>());
  MultiVector proj(dim, 4);
  for (int i = 0; i < tdim; ++i) proj += basis[i] * c(i);
  out.harmonic_residual = proj.euclidean_norm();
  return out;
}

ResidualReport associated_family_residual(const FramePoint& fp,
                                          Complex lambda) {
  if (std::abs(std::abs(lambda) - 1.0) > 1e-12)
    throw std::invalid_argument("associated_family_residual: |lambda| must be 1");
  ResidualReport rep;
  const Complex lb = std::conj(lambda);
  const JetVec kl = jv_scale(fp.kappa, lambda);
  const JetVec klb = jv_scale(jv_conj(fp.kappa), lb);
  const JetVec Dzk = normal_D(fp, fp.kappa, Dir::z);
  const JetVec Dzbk = normal_D(fp, fp.kappa, Dir::zb);
  const JetVec Dzkbar = normal_D(fp, jv_conj(fp.kappa), Dir::z);
  const JetVec DzbDzbk = normal_D(fp, Dzbk, Dir::zb);

  {
    const Complex lhs = 0.5 * fp.s.dzb().value();
    const Complex rhs =
        3.0 * minkowski(jv_scale(Dzkbar, lb), kl).value() +
        minkowski(klb, jv_scale(Dzk, lambda)).value();
    rep["gauss"] = std::abs(lhs - rhs);
  }
  {
    JetVec w = jv_scale(DzbDzbk, lambda);
    w = jv_add(w, jv_scale(kl, conj(fp.s) * Complex(0.5)));
    rep["codazzi"] = value_norm(imag_vec(w));
    rep["willmore"] = value_norm(w);
  }
  {
    double worst = 0.0;
    for (const auto& psi : fp.normal_basis) {
      JetVec lhs = jv_sub(normal_D(fp, normal_D(fp, psi, Dir::z), Dir::zb),
                          normal_D(fp, normal_D(fp, psi, Dir::zb), Dir::z));
      JetVec rhs = jv_scale(klb, minkowski(psi, kl) * Complex(2.0));
      rhs = jv_sub(rhs, jv_scale(kl, minkowski(psi, klb) * Complex(2.0)));
      worst = std::max(worst, value_norm(jv_sub(lhs, rhs)));
    }
    rep["ricci"] = worst;
  }
  return rep;
}

FramePoint frame_at_point(const SurfaceChart& chart, double u, double v,
                          int K) {
  return frame_at(canonical_lift_at(chart, u, v, K));
}

}  // namespace mobius
