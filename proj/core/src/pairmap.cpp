#include "mobius/pairmap.hpp"

#include <cmath>

namespace mobius {

namespace {

// Inner product of two sums of simple bivectors.
Complex sum_inner(const std::vector<Bivector>& A,
                  const std::vector<Bivector>& B) {
  Complex s(0.0);
  for (const auto& a : A)
    for (const auto& b : B) s += wedge_inner(a, b);
  return s;
}

}  // namespace

PairMapPoint pairmap_fundamental(const JetVec& Y, const JetVec& Yhat) {
  if (std::abs(minkowski(Y, Yhat).value() + 1.0) > 1e-8)
    throw std::invalid_argument("pairmap_fundamental: pair not normalized");
  PairMapPoint out;
  const CVec y = jv_value(Y);
  const CVec h = jv_value(Yhat);
  const CVec yz = jv_value(jv_dz(Y));
  const CVec yzb = jv_value(jv_dzb(Y));
  const CVec hz = jv_value(jv_dz(Yhat));
  const CVec hzb = jv_value(jv_dzb(Yhat));
  const CVec yzzb = jv_value(jv_dzb(jv_dz(Y)));
  const CVec hzzb = jv_value(jv_dzb(jv_dz(Yhat)));

  out.hh = wedge_inner({y, h}, {y, h});

  const std::vector<Bivector> Hz = {{yz, h}, {y, hz}};
  const std::vector<Bivector> Hzb = {{yzb, h}, {y, hzb}};
  out.hz_hz = sum_inner(Hz, Hz);
  out.hz_hzb = sum_inner(Hz, Hzb);

  // Orthonormal basis of {Y, Yhat}-perp (positive definite), by projecting
  // the coordinate directions.
  const size_t dim = y.size();
  std::vector<CVec> basis;
  for (size_t i = 0; i < dim && basis.size() < dim - 2; ++i) {
    CVec w(dim, Complex(0.0));
    w[i] = 1.0;
    const Complex wy = minkowski(w, y);
    const Complex wh = minkowski(w, h);
    for (size_t k = 0; k < dim; ++k) w[k] += wh * y[k] + wy * h[k];
    for (const auto& b : basis) {
      const Complex p = minkowski(w, b);
      for (size_t k = 0; k < dim; ++k) w[k] -= p * b[k];
    }
    const Complex n2 = minkowski(w, w);
    if (n2.real() > 1e-6) {
      const double inv = 1.0 / std::sqrt(n2.real());
      for (auto& c : w) c *= inv;
      basis.push_back(w);
    }
  }
  if (basis.size() != dim - 2)
    throw std::runtime_error(
        "pairmap_fundamental: degenerate pair (no complement basis)");

  const std::vector<Bivector> Hzzb = {{yzzb, h}, {yz, hzb}, {yzb, hz}, {y, hzzb}};
  double r2 = 0.0;
  for (const auto& w : basis) {
    const Complex a = sum_inner({{y, w}}, Hzzb);
    const Complex b = sum_inner({{w, h}}, Hzzb);
    r2 += std::norm(a) + std::norm(b);
  }
  out.harmonic_residual = std::sqrt(r2);
  return out;
}

double pair_energy(const std::vector<std::vector<Complex>>& rho,
                   const Domain& dom, const GridSpec& grid) {
  std::vector<std::vector<double>> vals(grid.nu, std::vector<double>(grid.nv));
  for (int i = 0; i < grid.nu; ++i)
    for (int j = 0; j < grid.nv; ++j)
      vals[i][j] = 2.0 * (rho[i][j] + std::conj(rho[i][j])).real();
  return integrate_grid(vals, dom, grid);
}

}  // namespace mobius
