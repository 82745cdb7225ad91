#include "mobius/chart.hpp"

#include <cmath>
#include <sstream>

namespace mobius {

std::vector<double> grid_axis(double a, double b, int n, bool periodic) {
  if (n < 4) throw std::invalid_argument("grid_axis: need at least 4 points");
  std::vector<double> x(n);
  const double h = periodic ? (b - a) / n : (b - a) / (n - 1);
  for (int i = 0; i < n; ++i) x[i] = a + i * h;
  return x;
}

namespace {

std::vector<double> quad_weights(double a, double b, int n, bool periodic) {
  std::vector<double> w(n);
  if (periodic) {
    const double h = (b - a) / n;
    for (int i = 0; i < n; ++i) w[i] = h;
  } else if ((n - 1) % 2 == 0) {
    const double h = (b - a) / (n - 1);
    for (int i = 0; i < n; ++i) {
      if (i == 0 || i == n - 1)
        w[i] = h / 3.0;
      else if (i % 2 == 1)
        w[i] = 4.0 * h / 3.0;
      else
        w[i] = 2.0 * h / 3.0;
    }
  } else {
    const double h = (b - a) / (n - 1);
    for (int i = 0; i < n; ++i) w[i] = (i == 0 || i == n - 1) ? h / 2.0 : h;
  }
  return w;
}

}  // namespace

double integrate_grid(const std::vector<std::vector<double>>& values,
                      const Domain& dom, const GridSpec& grid) {
  const auto wu = quad_weights(dom.u0, dom.u1, grid.nu, dom.periodic_u);
  const auto wv = quad_weights(dom.v0, dom.v1, grid.nv, dom.periodic_v);
  double s = 0.0;
  for (int i = 0; i < grid.nu; ++i)
    for (int j = 0; j < grid.nv; ++j) s += wu[i] * wv[j] * values[i][j];
  return s;
}

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

JetVec sphere_eval(double u, double v, int K) {
  const Jet2 U = Jet2::coordinate_u(u, K);
  const Jet2 V = Jet2::coordinate_v(v, K);
  const Jet2 r2 = U * U + V * V;
  const Jet2 den = r2 + Complex(1.0);
  JetVec f(4, Jet2(K));
  f[0] = U * Complex(2.0) / den;
  f[1] = V * Complex(2.0) / den;
  f[2] = (Complex(1.0) - r2) / den;
  // f[3] stays 0: equatorial S^2 inside S^3.
  return f;
}

JetVec clifford_eval(double u, double v, int K) {
  const double c = 1.0 / std::sqrt(2.0);
  const Jet2 U = Jet2::coordinate_u(u, K);
  const Jet2 V = Jet2::coordinate_v(v, K);
  JetVec f(4, Jet2(K));
  f[0] = cos(U) * Complex(c);
  f[1] = sin(U) * Complex(c);
  f[2] = cos(V) * Complex(c);
  f[3] = sin(V) * Complex(c);
  return f;
}

// Flat torus (a cos(lu), a sin(lu), b cos(mv), b sin(mv)) with a^2+b^2 = 1
// and a*l = b*m, which keeps (u, v) conformal; eps = 0 is the square torus.
JetVec flat_torus_eval(double u, double v, int K, double eps) {
  const double a = std::sqrt(0.5 + eps);
  const double b = std::sqrt(0.5 - eps);
  const double l = std::sqrt(b / a);
  const double m = std::sqrt(a / b);
  const Jet2 U = Jet2::coordinate_u(u, K) * Complex(l);
  const Jet2 V = Jet2::coordinate_v(v, K) * Complex(m);
  JetVec f(4, Jet2(K));
  f[0] = cos(U) * Complex(a);
  f[1] = sin(U) * Complex(a);
  f[2] = cos(V) * Complex(b);
  f[3] = sin(V) * Complex(b);
  return f;
}

JetVec veronese_eval(double u, double v, int K) {
  const double s3 = std::sqrt(3.0);
  const Jet2 U = Jet2::coordinate_u(u, K);
  const Jet2 V = Jet2::coordinate_v(v, K);
  const Jet2 r2 = U * U + V * V;
  const Jet2 den = r2 + Complex(1.0);
  const Jet2 x = U * Complex(2.0) / den;
  const Jet2 y = V * Complex(2.0) / den;
  const Jet2 z = (Complex(1.0) - r2) / den;
  JetVec f(5, Jet2(K));
  f[0] = x * y * Complex(s3);
  f[1] = x * z * Complex(s3);
  f[2] = y * z * Complex(s3);
  f[3] = (x * x - y * y) * Complex(s3 / 2.0);
  f[4] = (x * x + y * y - z * z * Complex(2.0)) * Complex(0.5);
  return f;
}

}  // namespace

SurfaceChart catalog(const std::string& name,
                     const std::map<std::string, double>& params) {
  SurfaceChart c;
  c.name = name;
  if (name == "sphere") {
    c.ambient_n = 3;
    c.domain = {-1.0, 1.0, -1.0, 1.0, false, false};
    c.eval = sphere_eval;
  } else if (name == "clifford") {
    c.ambient_n = 3;
    c.domain = {0.0, kTwoPi, 0.0, kTwoPi, true, true};
    c.eval = clifford_eval;
  } else if (name == "perturbed-clifford") {
    double eps = 0.05;
    if (auto it = params.find("eps"); it != params.end()) eps = it->second;
    if (!(eps > -0.5 && eps < 0.5))
      throw std::invalid_argument("perturbed-clifford: eps must be in (-0.5, 0.5)");
    const double a = std::sqrt(0.5 + eps);
    const double b = std::sqrt(0.5 - eps);
    c.ambient_n = 3;
    c.domain = {0.0, kTwoPi / std::sqrt(b / a), 0.0, kTwoPi / std::sqrt(a / b),
                true, true};
    c.eval = [eps](double u, double v, int K) {
      return flat_torus_eval(u, v, K, eps);
    };
  } else if (name == "veronese") {
    c.ambient_n = 4;
    c.domain = {-1.0, 1.0, -1.0, 1.0, false, false};
    c.eval = veronese_eval;
  } else {
    throw std::invalid_argument("catalog: unknown chart '" + name + "'");
  }
  return c;
}

SurfaceChart graph_chart(const GraphChartSpec& spec, const GridSpec& grid) {
  const int n = spec.ambient_n;
  if (n < 3) throw std::invalid_argument("graph_chart: ambient n must be >= 3");
  for (const auto& t : spec.terms)
    if (t.coord < 0 || t.coord > n)
      throw std::invalid_argument("graph_chart: term coordinate out of range");
  auto raw_eval = [spec, n](double u, double v, int K) {
    const Jet2 U = Jet2::coordinate_u(u, K);
    const Jet2 V = Jet2::coordinate_v(v, K);
    JetVec f(n + 1, Jet2(K));
    for (const auto& t : spec.terms) {
      const Jet2 arg = U * Complex(double(t.ju)) + V * Complex(double(t.jv));
      f[t.coord] += (t.use_sin ? sin(arg) : cos(arg)) * Complex(t.amp);
    }
    return f;
  };

  // Sphericity gate: renormalize only when the raw chart already lies on
  // S^n to within tolerance.
  const auto us = grid_axis(spec.domain.u0, spec.domain.u1, grid.nu,
                            spec.domain.periodic_u);
  const auto vs = grid_axis(spec.domain.v0, spec.domain.v1, grid.nv,
                            spec.domain.periodic_v);
  double spherr = 0.0;
  for (double u : us)
    for (double v : vs) {
      const JetVec f = raw_eval(u, v, 0);
      double n2 = 0.0;
      for (const auto& fi : f) n2 += std::norm(fi.value());
      spherr = std::max(spherr, std::abs(std::sqrt(n2) - 1.0));
    }
  if (spherr > 1e-8) {
    std::ostringstream msg;
    msg << "graph_chart: image not on S^n (sphericity residual " << spherr
        << "); refusing to project";
    throw std::invalid_argument(msg.str());
  }

  SurfaceChart c;
  c.name = "graph";
  c.ambient_n = n;
  c.domain = spec.domain;
  c.eval = [raw_eval](double u, double v, int K) {
    JetVec f = raw_eval(u, v, K);
    Jet2 n2(K);
    for (const auto& fi : f) n2 += fi * fi;
    const Jet2 inv = sqrt(n2);
    for (auto& fi : f) fi = fi / inv;
    return f;
  };

  const auto val = validate_chart(c, grid);
  if (val.conformality > 1e-10) {
    std::ostringstream msg;
    msg << "graph_chart: chart is not conformal (residual " << val.conformality
        << ")";
    throw std::invalid_argument(msg.str());
  }
  if (val.immersion_min < 1e-10) {
    std::ostringstream msg;
    msg << "graph_chart: chart degenerates (immersion margin "
        << val.immersion_min << ")";
    throw std::invalid_argument(msg.str());
  }
  return c;
}

JetVec light_cone_lift(const SurfaceChart& chart, double u, double v, int K) {
  const JetVec f = chart.eval(u, v, K);
  JetVec F(f.size() + 1, Jet2(K));
  F[0] = Jet2::constant(1.0, K);
  for (size_t i = 0; i < f.size(); ++i) F[i + 1] = f[i];
  return F;
}

JetVec canonical_lift(const JetVec& F) {
  const Jet2 q = minkowski(jv_dz(F), jv_dzb(F)) * Complex(2.0);
  if (q.value().real() <= kJetDivEps)
    throw SingularJetError("canonical_lift: non-immersion point");
  const JetVec Y = jv_div(F, sqrt(real_part(q)));
  if (Y[0].value().real() <= 0.0)
    throw std::runtime_error("canonical_lift: lift not in the forward light cone");
  return Y;
}

JetVec canonical_lift_at(const SurfaceChart& chart, double u, double v, int K) {
  return canonical_lift(light_cone_lift(chart, u, v, K + 1));
}

ChartValidation validate_chart(const SurfaceChart& chart, const GridSpec& grid,
                               int K) {
  ChartValidation out;
  out.immersion_min = 1e300;
  const auto us = grid_axis(chart.domain.u0, chart.domain.u1, grid.nu,
                            chart.domain.periodic_u);
  const auto vs = grid_axis(chart.domain.v0, chart.domain.v1, grid.nv,
                            chart.domain.periodic_v);
  for (double u : us)
    for (double v : vs) {
      const JetVec F = light_cone_lift(chart, u, v, K);
      double n2 = 0.0;
      for (size_t i = 1; i < F.size(); ++i) n2 += std::norm(F[i].value());
      out.sphericity = std::max(out.sphericity, std::abs(std::sqrt(n2) - 1.0));
      out.nullity = std::max(out.nullity, std::abs(minkowski(F, F).value()));
      const JetVec Fz = jv_dz(F);
      out.conformality =
          std::max(out.conformality, std::abs(minkowski(Fz, Fz).value()));
      out.immersion_min = std::min(
          out.immersion_min, minkowski(Fz, jv_dzb(F)).value().real());
    }
  return out;
}

SurfaceChart transformed_chart(const SurfaceChart& chart,
                               const Eigen::MatrixXd& T) {
  SurfaceChart c;
  c.name = chart.name + "+lorentz";
  c.ambient_n = chart.ambient_n;
  c.domain = chart.domain;
  auto base = chart.eval;
  const int n = chart.ambient_n;
  c.eval = [base, T, n](double u, double v, int K) {
    const JetVec f = base(u, v, K);
    JetVec F(n + 2, Jet2(K));
    F[0] = Jet2::constant(1.0, K);
    for (int i = 0; i < n + 1; ++i) F[i + 1] = f[i];
    const JetVec G = mobius::apply(T, F);
    if (G[0].value().real() <= kJetDivEps)
      throw std::runtime_error("transformed_chart: lift left the forward cone");
    JetVec g(n + 1, Jet2(K));
    for (int i = 0; i < n + 1; ++i) g[i] = G[i + 1] / G[0];
    return g;
  };
  return c;
}

}  // namespace mobius
