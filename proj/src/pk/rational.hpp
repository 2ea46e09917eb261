#pragma once

#include "pk/factored.hpp"

namespace pk {

// Quotient of factored polynomials, kept coprime (roots matched within
// kCancelTol are cancelled) with a monic denominator.
class RationalFn {
 public:
  RationalFn() : num_(FactoredPoly()), den_(FactoredPoly()) {}  // the constant 1
  RationalFn(FactoredPoly num, FactoredPoly den);

  static RationalFn zero() { return RationalFn(FactoredPoly::zero(), FactoredPoly()); }
  static RationalFn one() { return RationalFn(); }
  static RationalFn constant(cplx c) { return RationalFn(FactoredPoly::constant(c), FactoredPoly()); }
  static RationalFn from(FactoredPoly p) { return RationalFn(std::move(p), FactoredPoly()); }
  static RationalFn z_power(int n);  // z^n, n may be negative

  const FactoredPoly& num() const { return num_; }
  const FactoredPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }

  cplx eval(cplx z) const;

  RationalFn operator*(const RationalFn& o) const;
  RationalFn operator/(const RationalFn& o) const;
  RationalFn operator+(const RationalFn& o) const;
  RationalFn operator-(const RationalFn& o) const;
  RationalFn operator-() const;
  RationalFn scaled(cplx s) const;
  RationalFn inverse() const;

  // Boundary-value conjugate: the rational function equal to conj(f(z)) on
  // the unit circle.
  RationalFn conj_on_circle() const;

  // Analytic in the closed disk: all poles exterior.
  bool in_hardy_plus() const;
  // Analytic outside the closed disk and vanishing at infinity.
  bool in_hardy_minus() const;
  bool bounded_on_circle() const { return den_.count(Region::Circle) == 0; }
  bool vanishes_at_infinity() const { return num_.degree() < den_.degree(); }

  // Relative coefficient distance of cross-multiplied forms; 0 iff equal.
  double distance_to(const RationalFn& o) const;

 private:
  void normalize();
  FactoredPoly num_, den_;
};

}  // namespace pk
