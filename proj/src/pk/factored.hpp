#pragma once

#include <optional>
#include <vector>

#include "pk/error.hpp"
#include "pk/poly.hpp"

namespace pk {

// Location of a root relative to the unit circle.
enum class Region { Disk, Circle, Exterior };

inline char region_code(Region r) {
  switch (r) {
    case Region::Disk: return 'D';
    case Region::Circle: return 'T';
    case Region::Exterior: return 'E';
  }
  return '?';
}

Region classify_point(cplx z, double tol = kClassifyTol);
Region reflect_region(Region r);

struct Root {
  cplx z;
  int mult = 1;
  Region region = Region::Disk;
};

// Polynomial kept as leading * prod (z - root)^mult with region tags.
// Roots are stored in canonical (re, im) order. The zero polynomial has
// leading 0 and no roots.
class FactoredPoly {
 public:
  FactoredPoly() : leading_(1.0) {}  // the constant 1
  FactoredPoly(cplx leading, std::vector<Root> roots);

  static FactoredPoly zero();
  static FactoredPoly constant(cplx c) { return FactoredPoly(c, {}); }
  static FactoredPoly z_power(int n);
  static FactoredPoly linear(cplx root, double tol = kClassifyTol);  // z - root
  static FactoredPoly from_roots(cplx leading, const std::vector<cplx>& roots,
                                 double tol = kClassifyTol);

  bool is_zero() const { return leading_ == cplx(0.0); }
  bool is_constant() const { return roots_.empty(); }
  int degree() const;
  cplx leading() const { return leading_; }
  const std::vector<Root>& roots() const { return roots_; }

  cplx eval(cplx z) const;
  ComplexPoly expand() const;

  FactoredPoly operator*(const FactoredPoly& o) const;
  FactoredPoly scaled(cplx s) const;
  FactoredPoly pow(int n) const;
  FactoredPoly monic() const { return FactoredPoly(1.0, roots_); }

  // Count of roots (with multiplicity) in a region.
  int count(Region r) const;
  bool has_root_near(cplx z, double tol) const;
  double min_root_distance(cplx z) const;

  // Conjugate boundary values: conj(p(z)) = refl(z) * z^-deg on |z|=1, where
  // refl collects the reflected nonzero roots 1/conj(r). Returned first;
  // the z-power deficit is degree() (roots at 0 simply disappear from refl).
  FactoredPoly conj_reflected() const;

  // In-place reclassification of root regions with a new tolerance.
  void reclassify(double tol);

 private:
  void normalize();
  cplx leading_;
  std::vector<Root> roots_;
};

// Cancel matching roots of a and b (within tol), reducing multiplicities.
// Returns the cancelled common factor (monic).
FactoredPoly cancel_common(FactoredPoly& a, FactoredPoly& b, double tol = kCancelTol);

struct RegionSplit {
  FactoredPoly disk, circle, exterior;  // monic factors
  int n_disk = 0, n_circle = 0, n_exterior = 0;
  cplx leading = 1.0;
};

RegionSplit split_regions(const FactoredPoly& p);

}  // namespace pk
