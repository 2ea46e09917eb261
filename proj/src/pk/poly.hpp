#pragma once

#include <vector>

#include "pk/common.hpp"

namespace pk {

// Dense complex polynomial, coefficients in ascending degree. The zero
// polynomial is exactly {0}; otherwise the last coefficient is nonzero.
class ComplexPoly {
 public:
  ComplexPoly() : coeffs_{cplx(0.0)} {}
  explicit ComplexPoly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  static ComplexPoly constant(cplx c) { return ComplexPoly({c}); }
  static ComplexPoly z_power(int n);

  const std::vector<cplx>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == cplx(0.0); }
  int degree() const { return int(coeffs_.size()) - 1; }  // 0 for constants and the zero poly
  cplx leading() const { return coeffs_.back(); }
  cplx operator[](int i) const { return i >= 0 && i < int(coeffs_.size()) ? coeffs_[i] : cplx(0.0); }

  cplx eval(cplx z) const;
  ComplexPoly derivative() const;

  ComplexPoly operator+(const ComplexPoly& o) const;
  ComplexPoly operator-(const ComplexPoly& o) const;
  ComplexPoly operator*(const ComplexPoly& o) const;
  ComplexPoly operator*(cplx s) const;

  double max_abs_coeff() const;

 private:
  void trim();
  std::vector<cplx> coeffs_;
};

}  // namespace pk
