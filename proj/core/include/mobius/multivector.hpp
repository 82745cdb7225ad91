#pragma once

#include "mobius/lorentz.hpp"

namespace mobius {

/// Dense grade-k multivector over R^{n+1,1}, stored on the lexicographic
/// basis e_I, |I| = k. The induced metric is diagonal on this basis with
/// <e_I, e_I> = prod of eta_ii over I.
class MultiVector {
public:
  MultiVector(int dim, int grade);

  static MultiVector from_wedge(const std::vector<CVec>& factors);

  int dim() const { return dim_; }
  int grade() const { return grade_; }
  int size() const { return static_cast<int>(coeff_.size()); }
  Complex& operator[](int i) { return coeff_[i]; }
  Complex operator[](int i) const { return coeff_[i]; }

  MultiVector& operator+=(const MultiVector& rhs);
  MultiVector operator*(Complex s) const;

  /// Metric sign of the i-th basis subset.
  double basis_sign(int i) const;

  double euclidean_norm() const;

private:
  int dim_, grade_;
  std::vector<Complex> coeff_;
};

/// Indefinite pairing induced by the Minkowski form.
Complex mv_inner(const MultiVector& a, const MultiVector& b);

}  // namespace mobius
