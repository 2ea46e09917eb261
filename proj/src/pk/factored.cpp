#include "pk/factored.hpp"

#include <algorithm>
#include <cmath>

#include "pk/error.hpp"

namespace pk {

Region classify_point(cplx z, double tol) {
  double r = std::abs(z);
  if (std::abs(r - 1.0) <= tol) return Region::Circle;
  return r < 1.0 ? Region::Disk : Region::Exterior;
}

Region reflect_region(Region r) {
  switch (r) {
    case Region::Disk: return Region::Exterior;
    case Region::Exterior: return Region::Disk;
    case Region::Circle: return Region::Circle;
  }
  return Region::Circle;
}

FactoredPoly::FactoredPoly(cplx leading, std::vector<Root> roots)
    : leading_(leading), roots_(std::move(roots)) {
  normalize();
}

void FactoredPoly::normalize() {
  if (leading_ == cplx(0.0)) {
    roots_.clear();
    return;
  }
  for (auto& r : roots_) {
    if (r.mult < 0) fail(ErrorCode::Internal, "negative root multiplicity");
  }
  roots_.erase(std::remove_if(roots_.begin(), roots_.end(), [](const Root& r) { return r.mult == 0; }),
               roots_.end());
  std::sort(roots_.begin(), roots_.end(),
            [](const Root& a, const Root& b) { return cplx_less(a.z, b.z); });
  // merge bitwise-coincident locations (repeated factors of the same root)
  std::vector<Root> merged;
  for (const auto& r : roots_) {
    if (!merged.empty() && std::abs(merged.back().z - r.z) <= 1e-13 * std::max(1.0, std::abs(r.z)) &&
        merged.back().region == r.region) {
      merged.back().mult += r.mult;
    } else {
      merged.push_back(r);
    }
  }
  roots_ = std::move(merged);
}

FactoredPoly FactoredPoly::zero() { return FactoredPoly(0.0, {}); }

FactoredPoly FactoredPoly::z_power(int n) {
  if (n == 0) return FactoredPoly();
  return FactoredPoly(1.0, {Root{0.0, n, Region::Disk}});
}

FactoredPoly FactoredPoly::linear(cplx root, double tol) {
  return FactoredPoly(1.0, {Root{root, 1, classify_point(root, tol)}});
}

FactoredPoly FactoredPoly::from_roots(cplx leading, const std::vector<cplx>& roots, double tol) {
  std::vector<Root> rs;
  rs.reserve(roots.size());
  for (cplx z : roots) rs.push_back(Root{z, 1, classify_point(z, tol)});
  return FactoredPoly(leading, std::move(rs));
}

int FactoredPoly::degree() const {
  if (is_zero()) return -1;
  int d = 0;
  for (const auto& r : roots_) d += r.mult;
  return d;
}

cplx FactoredPoly::eval(cplx z) const {
  cplx acc = leading_;
  for (const auto& r : roots_)
    for (int i = 0; i < r.mult; ++i) acc *= (z - r.z);
  return acc;
}

ComplexPoly FactoredPoly::expand() const {
  if (is_zero()) return ComplexPoly();
  ComplexPoly p = ComplexPoly::constant(leading_);
  for (const auto& r : roots_) {
    ComplexPoly f({-r.z, 1.0});
    for (int i = 0; i < r.mult; ++i) p = p * f;
  }
  return p;
}

FactoredPoly FactoredPoly::operator*(const FactoredPoly& o) const {
  if (is_zero() || o.is_zero()) return zero();
  std::vector<Root> rs = roots_;
  rs.insert(rs.end(), o.roots_.begin(), o.roots_.end());
  return FactoredPoly(leading_ * o.leading_, std::move(rs));
}

FactoredPoly FactoredPoly::scaled(cplx s) const {
  if (s == cplx(0.0)) return zero();
  return FactoredPoly(leading_ * s, roots_);
}

FactoredPoly FactoredPoly::pow(int n) const {
  if (n == 0) return FactoredPoly();
  if (is_zero()) return zero();
  std::vector<Root> rs = roots_;
  for (auto& r : rs) r.mult *= n;
  cplx lead = 1.0;
  for (int i = 0; i < n; ++i) lead *= leading_;
  return FactoredPoly(lead, std::move(rs));
}

int FactoredPoly::count(Region region) const {
  int n = 0;
  for (const auto& r : roots_)
    if (r.region == region) n += r.mult;
  return n;
}

bool FactoredPoly::has_root_near(cplx z, double tol) const {
  for (const auto& r : roots_)
    if (std::abs(r.z - z) <= tol) return true;
  return false;
}

double FactoredPoly::min_root_distance(cplx z) const {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& r : roots_) d = std::min(d, std::abs(r.z - z));
  return d;
}

FactoredPoly FactoredPoly::conj_reflected() const {
  if (is_zero()) return zero();
  cplx lead = std::conj(leading_);
  std::vector<Root> rs;
  for (const auto& r : roots_) {
    if (r.z == cplx(0.0)) continue;  // conj(z)^m on the circle is handled by the z-power deficit
    cplx w = std::conj(r.z);
    cplx refl = 1.0 / w;
    for (int i = 0; i < r.mult; ++i) lead *= -w;
    rs.push_back(Root{refl, r.mult, reflect_region(r.region)});
  }
  return FactoredPoly(lead, std::move(rs));
}

void FactoredPoly::reclassify(double tol) {
  for (auto& r : roots_) r.region = classify_point(r.z, tol);
  normalize();
}

FactoredPoly cancel_common(FactoredPoly& a, FactoredPoly& b, double tol) {
  if (a.is_zero() || b.is_zero()) return FactoredPoly();
  std::vector<Root> ra = a.roots(), rb = b.roots(), common;
  for (auto& x : ra) {
    for (auto& y : rb) {
      if (y.mult == 0 || x.mult == 0) continue;
      if (std::abs(x.z - y.z) <= tol) {
        int m = std::min(x.mult, y.mult);
        common.push_back(Root{x.z, m, x.region});
        x.mult -= m;
        y.mult -= m;
      }
    }
  }
  a = FactoredPoly(a.leading(), std::move(ra));
  b = FactoredPoly(b.leading(), std::move(rb));
  return FactoredPoly(1.0, std::move(common));
}

RegionSplit split_regions(const FactoredPoly& p) {
  RegionSplit s;
  if (p.is_zero()) fail(ErrorCode::Internal, "split_regions of the zero polynomial");
  s.leading = p.leading();
  std::vector<Root> d, t, e;
  for (const auto& r : p.roots()) {
    switch (r.region) {
      case Region::Disk: d.push_back(r); break;
      case Region::Circle: t.push_back(r); break;
      case Region::Exterior: e.push_back(r); break;
    }
  }
  s.disk = FactoredPoly(1.0, std::move(d));
  s.circle = FactoredPoly(1.0, std::move(t));
  s.exterior = FactoredPoly(1.0, std::move(e));
  s.n_disk = s.disk.degree();
  s.n_circle = s.circle.degree();
  s.n_exterior = s.exterior.degree();
  return s;
}

}  // namespace pk
