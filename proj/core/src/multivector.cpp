#include "mobius/multivector.hpp"

#include <cmath>
#include <map>

namespace mobius {

namespace {

const std::vector<std::vector<int>>& subsets(int dim, int grade) {
  static std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache;
  auto key = std::make_pair(dim, grade);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<int>> out;
  std::vector<int> idx(grade);
  for (int i = 0; i < grade; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    int i = grade - 1;
    while (i >= 0 && idx[i] == dim - grade + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < grade; ++j) idx[j] = idx[j - 1] + 1;
  }
  return cache.emplace(key, std::move(out)).first->second;
}

Complex det_small(std::vector<Complex>& m, int k) {
  // In-place Gaussian elimination with partial pivoting; k <= 4.
  Complex det(1.0);
  for (int c = 0; c < k; ++c) {
    int piv = c;
    for (int r = c + 1; r < k; ++r)
      if (std::abs(m[r * k + c]) > std::abs(m[piv * k + c])) piv = r;
    if (piv != c) {
      for (int j = 0; j < k; ++j) std::swap(m[c * k + j], m[piv * k + j]);
      det = -det;
    }
    const Complex p = m[c * k + c];
    if (p == Complex(0.0)) return Complex(0.0);
    det *= p;
    for (int r = c + 1; r < k; ++r) {
      const Complex f = m[r * k + c] / p;
      for (int j = c; j < k; ++j) m[r * k + j] -= f * m[c * k + j];
    }
  }
  return det;
}

}  // namespace

MultiVector::MultiVector(int dim, int grade) : dim_(dim), grade_(grade) {
  coeff_.assign(subsets(dim, grade).size(), Complex(0.0));
}

MultiVector MultiVector::from_wedge(const std::vector<CVec>& factors) {
  const int k = static_cast<int>(factors.size());
  const int dim = static_cast<int>(factors[0].size());
  MultiVector mv(dim, k);
  const auto& subs = subsets(dim, k);
  std::vector<Complex> minor(k * k);
  for (size_t s = 0; s < subs.size(); ++s) {
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) minor[r * k + c] = factors[r][subs[s][c]];
    mv.coeff_[s] = det_small(minor, k);
  }
  return mv;
}

MultiVector& MultiVector::operator+=(const MultiVector& rhs) {
  if (dim_ != rhs.dim_ || grade_ != rhs.grade_)
    throw std::invalid_argument("MultiVector: shape mismatch");
  for (size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += rhs.coeff_[i];
  return *this;
}

MultiVector MultiVector::operator*(Complex s) const {
  MultiVector r = *this;
  for (auto& c : r.coeff_) c *= s;
  return r;
}

double MultiVector::basis_sign(int i) const {
  const auto& subs = subsets(dim_, grade_);
  return subs[i][0] == 0 ? -1.0 : 1.0;
}

double MultiVector::euclidean_norm() const {
  double s = 0.0;
  for (const auto& c : coeff_) s += std::norm(c);
  return std::sqrt(s);
}

Complex mv_inner(const MultiVector& a, const MultiVector& b) {
  if (a.dim() != b.dim() || a.grade() != b.grade())
    throw std::invalid_argument("mv_inner: shape mismatch");
  Complex s(0.0);
  for (int i = 0; i < a.size(); ++i) s += a.basis_sign(i) * a[i] * b[i];
  return s;
}

}  // namespace mobius
