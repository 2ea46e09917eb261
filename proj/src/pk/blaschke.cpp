#include "pk/blaschke.hpp"

#include <algorithm>

#include "pk/error.hpp"

namespace pk {

BlaschkeProduct::BlaschkeProduct(std::vector<Zero> zeros, cplx constant, double tol)
    : constant_(constant), zeros_(std::move(zeros)) {
  double c = std::abs(constant_);
  if (c == 0.0) fail(ErrorCode::ParseError, "Blaschke constant must be unimodular");
  if (std::abs(c - 1.0) > 1e-10)
    fail(ErrorCode::ParseError, "Blaschke constant must be unimodular, got |c|=" + fmt_double(c));
  constant_ /= c;
  for (const auto& z : zeros_) {
    if (z.mult <= 0) fail(ErrorCode::ParseError, "Blaschke zero multiplicity must be positive");
    if (std::abs(z.z) >= 1.0 - tol)
      fail(ErrorCode::ParseError, "Blaschke zero must lie inside the open disk");
  }
  std::sort(zeros_.begin(), zeros_.end(), [](const Zero& a, const Zero& b) { return cplx_less(a.z, b.z); });
}

BlaschkeProduct BlaschkeProduct::z_power(int n) {
  if (n == 0) return BlaschkeProduct();
  return BlaschkeProduct({Zero{0.0, n}});
}

int BlaschkeProduct::degree() const {
  int d = 0;
  for (const auto& z : zeros_) d += z.mult;
  return d;
}

cplx BlaschkeProduct::eval(cplx z) const {
  cplx acc = constant_;
  for (const auto& w : zeros_)
    for (int i = 0; i < w.mult; ++i) acc *= (z - w.z) / (1.0 - std::conj(w.z) * z);
  return acc;
}

RationalFn BlaschkeProduct::to_rational() const {
  FactoredPoly num = FactoredPoly::constant(constant_);
  FactoredPoly den;
  for (const auto& w : zeros_) {
    num = num * FactoredPoly(1.0, {Root{w.z, w.mult, Region::Disk}});
    if (w.z != cplx(0.0)) {
      // (1 - conj(a) z)^m  =  (-conj(a))^m (z - 1/conj(a))^m
      cplx a = std::conj(w.z);
      cplx lead = 1.0;
      for (int i = 0; i < w.mult; ++i) lead *= -a;
      den = den * FactoredPoly(lead, {Root{1.0 / a, w.mult, Region::Exterior}});
    }
  }
  return RationalFn(std::move(num), std::move(den));
}

BlaschkeSplit blaschke_split(const BlaschkeProduct& b) {
  BlaschkeSplit s;
  s.k = b.degree();
  // B_minus = c * prod (1 - a/z)^m = c * prod (z-a)^m / z^m over nonzero zeros
  FactoredPoly mnum = FactoredPoly::constant(b.constant());
  int nonzero = 0;
  FactoredPoly pden;
  for (const auto& w : b.zeros()) {
    if (w.z == cplx(0.0)) continue;
    nonzero += w.mult;
    mnum = mnum * FactoredPoly(1.0, {Root{w.z, w.mult, Region::Disk}});
    cplx a = std::conj(w.z);
    cplx lead = 1.0;
    for (int i = 0; i < w.mult; ++i) lead *= -a;
    pden = pden * FactoredPoly(lead, {Root{1.0 / a, w.mult, Region::Exterior}});
  }
  s.b_minus = RationalFn(std::move(mnum), FactoredPoly::z_power(nonzero));
  s.b_plus = RationalFn(FactoredPoly(), std::move(pden));
  return s;
}

}  // namespace pk
