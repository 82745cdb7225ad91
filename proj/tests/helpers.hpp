#pragma once

#include <random>

#include "mobius/chart.hpp"
#include "mobius/invariants.hpp"
#include "mobius/pair.hpp"

namespace mobius::testing {

inline RVec random_rvec(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> g;
  RVec x(dim);
  for (auto& xi : x) xi = g(rng);
  return x;
}

inline CVec random_cvec(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> g;
  CVec x(dim);
  for (auto& xi : x) xi = Complex(g(rng), g(rng));
  return x;
}

/// A generic pair over the clifford chart: Y canonical, Yhat the
/// normalized lift of a Moebius transform of the round sphere evaluated at
/// the same parameter point. Distinct base points for generic seeds.
struct TestPair {
  SurfaceChart chart_a, chart_b;
  FramePoint fp;
  JetVec Yhat;
};

inline TestPair make_test_pair(unsigned long seed, double u, double v,
                               int K = 6) {
  TestPair tp;
  tp.chart_a = catalog("clifford");
  tp.chart_b = transformed_chart(catalog("sphere"), random_lorentz(seed, 3));
  tp.fp = frame_at_point(tp.chart_a, u, v, K);
  const JetVec Yhat_raw = canonical_lift_at(tp.chart_b, u, v, K);
  tp.Yhat = normalize_pair(tp.fp.Y, Yhat_raw);
  return tp;
}

/// Reparametrization z -> z/2 of a chart's jets: g(w) = f(2w), so
/// coeff_g(j,k) = 2^{j+k} coeff_f(j,k) at the doubled point.
inline JetVec rescale_double(const JetVec& f, int /*unused*/ = 0) {
  JetVec g = f;
  for (auto& gi : g)
    for (int j = 0; j <= gi.order(); ++j)
      for (int k = 0; j + k <= gi.order(); ++k)
        gi.coeff(j, k) *= std::pow(2.0, j + k);
  return g;
}

/// Reparametrization z -> z/i (i.e. w with z = i w): g(u,v) = f(-v,u),
/// coeff_g(j,k) = (-1)^k coeff_f(k,j).
inline JetVec rescale_rot90(const JetVec& f) {
  JetVec g;
  g.reserve(f.size());
  for (const auto& fi : f) {
    Jet2 gi(fi.order());
    for (int j = 0; j <= fi.order(); ++j)
      for (int k = 0; j + k <= fi.order(); ++k)
        gi.coeff(j, k) = ((k % 2) ? -1.0 : 1.0) * fi.coeff(k, j);
    g.push_back(gi);
  }
  return g;
}

}  // namespace mobius::testing
