#include "pk/poly.hpp"

#include <algorithm>

namespace pk {

void ComplexPoly::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == cplx(0.0)) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(cplx(0.0));
}

ComplexPoly ComplexPoly::z_power(int n) {
  std::vector<cplx> c(std::size_t(n) + 1, cplx(0.0));
  c.back() = 1.0;
  return ComplexPoly(std::move(c));
}

cplx ComplexPoly::eval(cplx z) const {
  cplx acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

ComplexPoly ComplexPoly::derivative() const {
  if (coeffs_.size() <= 1) return ComplexPoly();
  std::vector<cplx> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = double(i) * coeffs_[i];
  return ComplexPoly(std::move(d));
}

ComplexPoly ComplexPoly::operator+(const ComplexPoly& o) const {
  std::vector<cplx> c(std::max(coeffs_.size(), o.coeffs_.size()), cplx(0.0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return ComplexPoly(std::move(c));
}

ComplexPoly ComplexPoly::operator-(const ComplexPoly& o) const {
  std::vector<cplx> c(std::max(coeffs_.size(), o.coeffs_.size()), cplx(0.0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
  return ComplexPoly(std::move(c));
}

ComplexPoly ComplexPoly::operator*(const ComplexPoly& o) const {
  if (is_zero() || o.is_zero()) return ComplexPoly();
  std::vector<cplx> c(coeffs_.size() + o.coeffs_.size() - 1, cplx(0.0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return ComplexPoly(std::move(c));
}

ComplexPoly ComplexPoly::operator*(cplx s) const {
  std::vector<cplx> c(coeffs_);
  for (auto& x : c) x *= s;
  return ComplexPoly(std::move(c));
}

double ComplexPoly::max_abs_coeff() const {
  double m = 0.0;
  for (auto& x : coeffs_) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace pk
