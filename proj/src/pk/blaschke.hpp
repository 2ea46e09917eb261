#pragma once

#include "pk/rational.hpp"

namespace pk {

// Finite Blaschke product c * prod ((z - a)/(1 - conj(a) z))^m with |c| = 1
// and every zero inside the open disk (zeros at the origin give the z^k part).
class BlaschkeProduct {
 public:
  struct Zero {
    cplx z;
    int mult = 1;
  };

  explicit BlaschkeProduct(std::vector<Zero> zeros = {}, cplx constant = 1.0,
                           double tol = kClassifyTol);
  static BlaschkeProduct z_power(int n);

  const std::vector<Zero>& zeros() const { return zeros_; }
  cplx constant() const { return constant_; }
  int degree() const;  // zero count with multiplicity
  bool is_constant() const { return zeros_.empty(); }

  cplx eval(cplx z) const;
  RationalFn to_rational() const;

 private:
  cplx constant_;
  std::vector<Zero> zeros_;
};

// B = B_minus * z^k * B_plus on the circle, with B_minus invertible in the
// antianalytic algebra and B_plus invertible in the analytic one. Zeros at
// the origin are routed entirely to the z^k factor.
struct BlaschkeSplit {
  RationalFn b_minus;
  int k = 0;
  RationalFn b_plus;
};

BlaschkeSplit blaschke_split(const BlaschkeProduct& b);

}  // namespace pk
