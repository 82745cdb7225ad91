#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace mobius {

using Complex = std::complex<double>;

/// Thrown when dividing by a jet whose constant term is (nearly) zero,
/// or taking sqrt of a jet with non-positive real constant term.
class SingularJetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Truncated bivariate Taylor jet at a point (u, v).
///
/// Coefficient (j, k) stores the mixed partial d_u^j d_v^k f evaluated at the
/// base point, for j + k <= order. Arithmetic is closed under the (minimum)
/// order of the operands; coefficients beyond it are discarded.
class Jet2 {
public:
  Jet2() : order_(0), c_(1, Complex(0.0)) {}
  explicit Jet2(int order);

  static Jet2 constant(Complex value, int order);
  static Jet2 coordinate_u(double u0, int order);
  static Jet2 coordinate_v(double v0, int order);
  /// Jet of z = u + iv.
  static Jet2 coordinate_z(double u0, double v0, int order);

  int order() const { return order_; }

  Complex coeff(int j, int k) const { return c_[idx(j, k)]; }
  Complex& coeff(int j, int k) { return c_[idx(j, k)]; }

  /// The (0,0) coefficient, i.e. the value at the base point.
  Complex value() const { return c_[0]; }

  Jet2 truncated(int new_order) const;

  /// Wirtinger derivative d_z = (d_u - i d_v)/2; output order drops by one.
  Jet2 dz() const;
  /// Wirtinger derivative d_zb = (d_u + i d_v)/2; output order drops by one.
  Jet2 dzb() const;
  /// (d_z)^p (d_zb)^q.
  Jet2 wirtinger(int p, int q) const;

  Jet2 operator-() const;
  Jet2& operator+=(const Jet2& rhs);
  Jet2& operator-=(const Jet2& rhs);
  Jet2& operator*=(Complex s);

private:
  int idx(int j, int k) const {
    if (j < 0 || k < 0 || j + k > order_)
      throw std::invalid_argument("Jet2: coefficient index out of range");
    return j * (order_ + 1) + k;
  }
  int order_;
  std::vector<Complex> c_;
};

Jet2 operator+(const Jet2& a, const Jet2& b);
Jet2 operator-(const Jet2& a, const Jet2& b);
Jet2 operator*(const Jet2& a, const Jet2& b);
Jet2 operator/(const Jet2& a, const Jet2& b);

Jet2 operator+(const Jet2& a, Complex s);
Jet2 operator+(Complex s, const Jet2& a);
Jet2 operator-(const Jet2& a, Complex s);
Jet2 operator-(Complex s, const Jet2& a);
Jet2 operator*(const Jet2& a, Complex s);
Jet2 operator*(Complex s, const Jet2& a);
Jet2 operator/(const Jet2& a, Complex s);

Jet2 conj(const Jet2& a);
Jet2 real_part(const Jet2& a);
Jet2 imag_part(const Jet2& a);
Jet2 sqrt(const Jet2& a);
Jet2 exp(const Jet2& a);
Jet2 sin(const Jet2& a);
Jet2 cos(const Jet2& a);

/// Tolerance on the constant term below which division/sqrt signal a
/// singular jet (degenerate normalization).
inline constexpr double kJetDivEps = 1e-12;

/// A vector of jets sharing one order; the jet-valued analogue of a point
/// of R^{n+1,1} or its complexification.
using JetVec = std::vector<Jet2>;

JetVec jv_constant(const std::vector<double>& x, int order);
JetVec jv_add(const JetVec& a, const JetVec& b);
JetVec jv_sub(const JetVec& a, const JetVec& b);
JetVec jv_scale(const JetVec& a, const Jet2& s);
JetVec jv_scale(const JetVec& a, Complex s);
JetVec jv_div(const JetVec& a, const Jet2& s);
JetVec jv_conj(const JetVec& a);
JetVec jv_dz(const JetVec& a);
JetVec jv_dzb(const JetVec& a);
std::vector<Complex> jv_value(const JetVec& a);

}  // namespace mobius
