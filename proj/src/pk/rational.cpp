#include "pk/rational.hpp"

#include <algorithm>

#include "pk/error.hpp"
#include "pk/factor.hpp"

namespace pk {

RationalFn::RationalFn(FactoredPoly num, FactoredPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorCode::Internal, "zero denominator");
  normalize();
}

void RationalFn::normalize() {
  if (num_.is_zero()) {
    den_ = FactoredPoly();
    return;
  }
  cancel_common(num_, den_);
  // fold the denominator's leading constant into the numerator
  cplx dl = den_.leading();
  if (dl != cplx(1.0)) {
    den_ = den_.scaled(1.0 / dl);
    num_ = num_.scaled(1.0 / dl);
  }
}

RationalFn RationalFn::z_power(int n) {
  if (n >= 0) return from(FactoredPoly::z_power(n));
  return RationalFn(FactoredPoly(), FactoredPoly::z_power(-n));
}

cplx RationalFn::eval(cplx z) const { return num_.eval(z) / den_.eval(z); }

RationalFn RationalFn::operator*(const RationalFn& o) const {
  if (is_zero() || o.is_zero()) return zero();
  return RationalFn(num_ * o.num_, den_ * o.den_);
}

RationalFn RationalFn::operator/(const RationalFn& o) const {
  if (o.is_zero()) fail(ErrorCode::Internal, "division by the zero function");
  if (is_zero()) return zero();
  return RationalFn(num_ * o.den_, den_ * o.num_);
}

RationalFn RationalFn::inverse() const {
  if (is_zero()) fail(ErrorCode::Internal, "inverse of the zero function");
  return RationalFn(den_, num_);
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  ComplexPoly numer = num_.expand() * o.den_.expand() + o.num_.expand() * den_.expand();
  if (numer.is_zero()) return zero();
  double scale = numer.max_abs_coeff();
  ComplexPoly left = num_.expand() * o.den_.expand();
  if (scale < 1e-14 * left.max_abs_coeff()) return zero();  // exact-by-intent cancellation
  return RationalFn(roots(numer), den_ * o.den_);
}

RationalFn RationalFn::operator-(const RationalFn& o) const { return *this + (-o); }

RationalFn RationalFn::operator-() const { return scaled(-1.0); }

RationalFn RationalFn::scaled(cplx s) const {
  if (s == cplx(0.0)) return zero();
  return RationalFn(num_.scaled(s), den_);
}

RationalFn RationalFn::conj_on_circle() const {
  if (is_zero()) return zero();
  FactoredPoly rn = num_.conj_reflected();
  FactoredPoly rd = den_.conj_reflected();
  int shift = den_.degree() - num_.degree();
  if (shift >= 0) return RationalFn(rn * FactoredPoly::z_power(shift), rd);
  return RationalFn(rn, rd * FactoredPoly::z_power(-shift));
}

bool RationalFn::in_hardy_plus() const {
  if (is_zero()) return true;
  return den_.count(Region::Disk) == 0 && den_.count(Region::Circle) == 0;
}

bool RationalFn::in_hardy_minus() const {
  if (is_zero()) return true;
  return den_.count(Region::Exterior) == 0 && den_.count(Region::Circle) == 0 &&
         vanishes_at_infinity();
}

double RationalFn::distance_to(const RationalFn& o) const {
  ComplexPoly lhs = num_.expand() * o.den_.expand();
  ComplexPoly rhs = o.num_.expand() * den_.expand();
  ComplexPoly diff = lhs - rhs;
  double scale = std::max(lhs.max_abs_coeff(), rhs.max_abs_coeff());
  if (scale == 0.0) return 0.0;
  return diff.max_abs_coeff() / scale;
}

}  // namespace pk
