#include "mobius/jet.hpp"

#include <algorithm>
#include <cmath>

namespace mobius {

namespace {

constexpr int kMaxOrder = 32;

// Binomial coefficients up to kMaxOrder.
const double* binom_row(int n) {
  static std::vector<std::vector<double>> table = [] {
    std::vector<std::vector<double>> t(kMaxOrder + 1);
    for (int n = 0; n <= kMaxOrder; ++n) {
      t[n].resize(n + 1);
      t[n][0] = t[n][n] = 1.0;
      for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
  }();
  return table[n].data();
}

inline double C(int n, int k) { return binom_row(n)[k]; }

}  // namespace

Jet2::Jet2(int order) : order_(order) {
  if (order < 0 || order > kMaxOrder)
    throw std::invalid_argument("Jet2: bad order");
  c_.assign((order + 1) * (order + 1), Complex(0.0));
}

Jet2 Jet2::constant(Complex value, int order) {
  Jet2 r(order);
  r.coeff(0, 0) = value;
  return r;
}

Jet2 Jet2::coordinate_u(double u0, int order) {
  Jet2 r(order);
  r.coeff(0, 0) = u0;
  if (order >= 1) r.coeff(1, 0) = 1.0;
  return r;
}

Jet2 Jet2::coordinate_v(double v0, int order) {
  Jet2 r(order);
  r.coeff(0, 0) = v0;
  if (order >= 1) r.coeff(0, 1) = 1.0;
  return r;
}

Jet2 Jet2::coordinate_z(double u0, double v0, int order) {
  Jet2 r(order);
  r.coeff(0, 0) = Complex(u0, v0);
  if (order >= 1) {
    r.coeff(1, 0) = 1.0;
    r.coeff(0, 1) = Complex(0.0, 1.0);
  }
  return r;
}

Jet2 Jet2::truncated(int new_order) const {
  if (new_order > order_)
    throw std::invalid_argument("Jet2::truncated: cannot extend order");
  Jet2 r(new_order);
  for (int j = 0; j <= new_order; ++j)
    for (int k = 0; j + k <= new_order; ++k) r.coeff(j, k) = coeff(j, k);
  return r;
}

Jet2 Jet2::dz() const {
  if (order_ < 1) throw std::invalid_argument("Jet2::dz: order exhausted");
  Jet2 r(order_ - 1);
  const Complex I(0.0, 1.0);
  for (int j = 0; j <= r.order(); ++j)
    for (int k = 0; j + k <= r.order(); ++k)
      r.coeff(j, k) = 0.5 * (coeff(j + 1, k) - I * coeff(j, k + 1));
  return r;
}

Jet2 Jet2::dzb() const {
  if (order_ < 1) throw std::invalid_argument("Jet2::dzb: order exhausted");
  Jet2 r(order_ - 1);
  const Complex I(0.0, 1.0);
  for (int j = 0; j <= r.order(); ++j)
    for (int k = 0; j + k <= r.order(); ++k)
      r.coeff(j, k) = 0.5 * (coeff(j + 1, k) + I * coeff(j, k + 1));
  return r;
}

Jet2 Jet2::wirtinger(int p, int q) const {
  if (p < 0 || q < 0 || p + q > order_)
    throw std::invalid_argument("Jet2::wirtinger: order exhausted");
  Jet2 r = *this;
  for (int i = 0; i < p; ++i) r = r.dz();
  for (int i = 0; i < q; ++i) r = r.dzb();
  return r;
}

Jet2 Jet2::operator-() const {
  Jet2 r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Jet2& Jet2::operator+=(const Jet2& rhs) {
  *this = *this + rhs;
  return *this;
}

Jet2& Jet2::operator-=(const Jet2& rhs) {
  *this = *this - rhs;
  return *this;
}

Jet2& Jet2::operator*=(Complex s) {
  for (auto& c : c_) c *= s;
  return *this;
}

namespace {

template <class Op>
Jet2 zip(const Jet2& a, const Jet2& b, Op op) {
  const int K = std::min(a.order(), b.order());
  Jet2 r(K);
  for (int j = 0; j <= K; ++j)
    for (int k = 0; j + k <= K; ++k) r.coeff(j, k) = op(a.coeff(j, k), b.coeff(j, k));
  return r;
}

}  // namespace

Jet2 operator+(const Jet2& a, const Jet2& b) {
  return zip(a, b, [](Complex x, Complex y) { return x + y; });
}

Jet2 operator-(const Jet2& a, const Jet2& b) {
  return zip(a, b, [](Complex x, Complex y) { return x - y; });
}

Jet2 operator*(const Jet2& a, const Jet2& b) {
  const int K = std::min(a.order(), b.order());
  Jet2 r(K);
  for (int j = 0; j <= K; ++j)
    for (int k = 0; j + k <= K; ++k) {
      Complex s(0.0);
      for (int p = 0; p <= j; ++p)
        for (int q = 0; q <= k; ++q)
          s += C(j, p) * C(k, q) * a.coeff(p, q) * b.coeff(j - p, k - q);
      r.coeff(j, k) = s;
    }
  return r;
}

Jet2 operator/(const Jet2& a, const Jet2& b) {
  const int K = std::min(a.order(), b.order());
  if (std::abs(b.value()) < kJetDivEps)
    throw SingularJetError("Jet2 division: constant term below tolerance");
  Jet2 r(K);
  // r * b = a, coefficients solved in componentwise-monotone order.
  for (int j = 0; j <= K; ++j)
    for (int k = 0; j + k <= K; ++k) {
      Complex s = a.coeff(j, k);
      for (int p = 0; p <= j; ++p)
        for (int q = 0; q <= k; ++q) {
          if (p == j && q == k) continue;
          s -= C(j, p) * C(k, q) * r.coeff(p, q) * b.coeff(j - p, k - q);
        }
      r.coeff(j, k) = s / b.coeff(0, 0);
    }
  return r;
}

Jet2 operator+(const Jet2& a, Complex s) {
  Jet2 r = a;
  r.coeff(0, 0) += s;
  return r;
}
Jet2 operator+(Complex s, const Jet2& a) { return a + s; }
Jet2 operator-(const Jet2& a, Complex s) { return a + (-s); }
Jet2 operator-(Complex s, const Jet2& a) { return (-a) + s; }
Jet2 operator*(const Jet2& a, Complex s) {
  Jet2 r = a;
  r *= s;
  return r;
}
Jet2 operator*(Complex s, const Jet2& a) { return a * s; }
Jet2 operator/(const Jet2& a, Complex s) {
  if (std::abs(s) < kJetDivEps)
    throw SingularJetError("Jet2 division by (near-)zero scalar");
  return a * (Complex(1.0) / s);
}

Jet2 conj(const Jet2& a) {
  Jet2 r = a;
  for (int j = 0; j <= a.order(); ++j)
    for (int k = 0; j + k <= a.order(); ++k) r.coeff(j, k) = std::conj(a.coeff(j, k));
  return r;
}

Jet2 real_part(const Jet2& a) { return (a + conj(a)) * Complex(0.5); }
Jet2 imag_part(const Jet2& a) { return (a - conj(a)) * Complex(0.0, -0.5); }

Jet2 sqrt(const Jet2& a) {
  const int K = a.order();
  const Complex a0 = a.value();
  if (std::abs(a0) < kJetDivEps)
    throw SingularJetError("Jet2 sqrt: constant term below tolerance");
  Jet2 r(K);
  r.coeff(0, 0) = std::sqrt(a0);
  const Complex two_r0 = 2.0 * r.coeff(0, 0);
  // r * r = a, solved in componentwise-monotone order.
  for (int d = 1; d <= K; ++d)
    for (int j = 0; j <= d; ++j) {
      const int k = d - j;
      Complex s = a.coeff(j, k);
      for (int p = 0; p <= j; ++p)
        for (int q = 0; q <= k; ++q) {
          if ((p == 0 && q == 0) || (p == j && q == k)) continue;
          s -= C(j, p) * C(k, q) * r.coeff(p, q) * r.coeff(j - p, k - q);
        }
      r.coeff(j, k) = s / two_r0;
    }
  return r;
}

namespace {

// Propagates a first-order ODE relation g' = h(f') through all mixed
// partials: out(j,k) for j>=1 is the Leibniz expansion of (df * src)(j-1,k),
// and similarly in v for j==0, k>=1.
// Used for exp/sin/cos below.
struct DerivRecurrence {
  const Jet2& f;
  // Fills target(j,k), assuming all coefficients of lower total degree of
  // every involved jet are already known.
  static Complex step_u(const Jet2& f, const Jet2& g, int j, int k) {
    // d_u^{j-1} d_v^k (f_u * g)
    Complex s(0.0);
    for (int p = 0; p <= j - 1; ++p)
      for (int q = 0; q <= k; ++q)
        s += C(j - 1, p) * C(k, q) * f.coeff(p + 1, q) * g.coeff(j - 1 - p, k - q);
    return s;
  }
  static Complex step_v(const Jet2& f, const Jet2& g, int k) {
    // d_v^{k-1} (f_v * g) at j = 0
    Complex s(0.0);
    for (int q = 0; q <= k - 1; ++q)
      s += C(k - 1, q) * f.coeff(0, q + 1) * g.coeff(0, k - 1 - q);
    return s;
  }
};

}  // namespace

Jet2 exp(const Jet2& a) {
  const int K = a.order();
  Jet2 r(K);
  r.coeff(0, 0) = std::exp(a.value());
  for (int d = 1; d <= K; ++d)
    for (int j = 0; j <= d; ++j) {
      const int k = d - j;
      r.coeff(j, k) = (j >= 1) ? DerivRecurrence::step_u(a, r, j, k)
                               : DerivRecurrence::step_v(a, r, k);
    }
  return r;
}

namespace {

void sincos_jets(const Jet2& a, Jet2& s, Jet2& c) {
  const int K = a.order();
  s = Jet2(K);
  c = Jet2(K);
  s.coeff(0, 0) = std::sin(a.value());
  c.coeff(0, 0) = std::cos(a.value());
  for (int d = 1; d <= K; ++d)
    for (int j = 0; j <= d; ++j) {
      const int k = d - j;
      if (j >= 1) {
        s.coeff(j, k) = DerivRecurrence::step_u(a, c, j, k);
        c.coeff(j, k) = -DerivRecurrence::step_u(a, s, j, k);
      } else {
        s.coeff(j, k) = DerivRecurrence::step_v(a, c, k);
        c.coeff(j, k) = -DerivRecurrence::step_v(a, s, k);
      }
    }
}

}  // namespace

Jet2 sin(const Jet2& a) {
  Jet2 s, c;
  sincos_jets(a, s, c);
  return s;
}

Jet2 cos(const Jet2& a) {
  Jet2 s, c;
  sincos_jets(a, s, c);
  return c;
}

JetVec jv_constant(const std::vector<double>& x, int order) {
  JetVec r;
  r.reserve(x.size());
  for (double xi : x) r.push_back(Jet2::constant(xi, order));
  return r;
}

JetVec jv_add(const JetVec& a, const JetVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("jv_add: size mismatch");
  JetVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

JetVec jv_sub(const JetVec& a, const JetVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("jv_sub: size mismatch");
  JetVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

JetVec jv_scale(const JetVec& a, const Jet2& s) {
  JetVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

JetVec jv_scale(const JetVec& a, Complex s) {
  JetVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

JetVec jv_div(const JetVec& a, const Jet2& s) {
  JetVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] / s;
  return r;
}

JetVec jv_conj(const JetVec& a) {
  JetVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = conj(a[i]);
  return r;
}

JetVec jv_dz(const JetVec& a) {
  JetVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i].dz();
  return r;
}

JetVec jv_dzb(const JetVec& a) {
  JetVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i].dzb();
  return r;
}

std::vector<Complex> jv_value(const JetVec& a) {
  std::vector<Complex> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i].value();
  return r;
}

}  // namespace mobius
