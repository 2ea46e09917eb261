#include "pk/symbols.hpp"

#include <algorithm>
#include <sstream>

#include "pk/error.hpp"

namespace pk {

SingularInnerAtom::SingularInnerAtom(cplx p, double m) : point(p), mass(m) {
  double r = std::abs(point);
  if (std::abs(r - 1.0) > 1e-12)
    fail(ErrorCode::ParseError, "atom point must lie on the unit circle");
  point /= r;
  if (!(mass > 0.0)) fail(ErrorCode::ParseError, "atom mass must be positive");
}

cplx SingularInnerAtom::eval(cplx z) const { return std::exp(mass * (z + point) / (z - point)); }

BoundarySymbol BoundarySymbol::from_blaschke(const BlaschkeProduct& b, bool conjugated) {
  BoundarySymbol s;
  s.rational_ = conjugated ? b.to_rational().conj_on_circle() : b.to_rational();
  if (!b.is_constant()) s.hints_.push_back(BlaschkeHint{b, conjugated});
  return s;
}

BoundarySymbol BoundarySymbol::from_atom(const SingularInnerAtom& a, int exponent) {
  if (exponent != 1 && exponent != -1) fail(ErrorCode::ParseError, "atom exponent must be +1 or -1");
  BoundarySymbol s;
  s.atoms_.push_back(AtomPower{a, exponent});
  return s;
}

cplx BoundarySymbol::eval(cplx z) const {
  if (std::abs(std::abs(z) - 1.0) > 1e-12)
    fail(ErrorCode::PoleOnEvaluationPoint, "evaluation point must lie on the unit circle");
  if (rational_.den().min_root_distance(z) <= kPoleGuardTol)
    fail(ErrorCode::PoleOnEvaluationPoint, "evaluation point is a pole of the symbol");
  cplx acc = rational_.eval(z);
  for (const auto& a : atoms_) {
    if (std::abs(z - a.atom.point) <= kPoleGuardTol)
      fail(ErrorCode::PoleOnEvaluationPoint, "evaluation point coincides with a singular atom");
    cplx v = a.atom.eval(z);
    acc *= a.exponent == 1 ? v : 1.0 / v;
  }
  return acc;
}

void BoundarySymbol::merge_atoms() {
  // combine same-point atoms by summing signed masses
  std::vector<std::pair<cplx, double>> masses;
  for (const auto& a : atoms_) {
    bool found = false;
    for (auto& m : masses) {
      if (std::abs(m.first - a.atom.point) <= 1e-12) {
        m.second += a.exponent * a.atom.mass;
        found = true;
        break;
      }
    }
    if (!found) masses.emplace_back(a.atom.point, a.exponent * a.atom.mass);
  }
  atoms_.clear();
  std::sort(masses.begin(), masses.end(),
            [](const auto& x, const auto& y) { return cplx_less(x.first, y.first); });
  for (const auto& m : masses) {
    if (std::abs(m.second) <= 1e-14) continue;
    atoms_.push_back(AtomPower{SingularInnerAtom(m.first, std::abs(m.second)), m.second > 0 ? 1 : -1});
  }
}

BoundarySymbol BoundarySymbol::operator*(const BoundarySymbol& o) const {
  BoundarySymbol s;
  s.rational_ = rational_ * o.rational_;
  s.atoms_ = atoms_;
  s.atoms_.insert(s.atoms_.end(), o.atoms_.begin(), o.atoms_.end());
  s.merge_atoms();
  s.hints_ = hints_;
  s.hints_.insert(s.hints_.end(), o.hints_.begin(), o.hints_.end());
  return s;
}

BoundarySymbol BoundarySymbol::operator/(const BoundarySymbol& o) const {
  BoundarySymbol s;
  s.rational_ = rational_ / o.rational_;
  s.atoms_ = atoms_;
  for (auto a : o.atoms_) {
    a.exponent = -a.exponent;
    s.atoms_.push_back(a);
  }
  s.merge_atoms();
  s.hints_ = hints_;  // hints of the divisor are consumed, not inverted
  return s;
}

BoundarySymbol BoundarySymbol::conj_on_circle() const {
  BoundarySymbol s;
  s.rational_ = rational_.conj_on_circle();
  for (auto a : atoms_) {
    a.exponent = -a.exponent;
    a.atom.point = std::conj(a.atom.point);
    s.atoms_.push_back(a);
  }
  s.merge_atoms();
  for (auto h : hints_) {
    h.conjugated = !h.conjugated;
    s.hints_.push_back(h);
  }
  return s;
}

namespace {

void append_factored_token(std::ostringstream& out, const FactoredPoly& p, int sign, bool& first,
                           int& zpow) {
  for (const auto& r : p.roots()) {
    if (r.z == cplx(0.0)) {
      zpow += sign * r.mult;
      continue;
    }
    if (!first) out << "*";
    first = false;
    out << "(z-" << fmt_cplx_token(r.z) << ")";
    int e = sign * r.mult;
    if (e != 1) out << "^" << e;
  }
}

}  // namespace

std::string BoundarySymbol::token() const {
  if (rational_.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  int zpow = 0;
  cplx c = rational_.num().leading() / rational_.den().leading();
  if (std::abs(c - cplx(1.0)) > 1e-12) {
    out << fmt_cplx_token(c);
    first = false;
  }
  std::ostringstream body;
  bool bfirst = true;
  append_factored_token(body, rational_.num(), +1, bfirst, zpow);
  append_factored_token(body, rational_.den(), -1, bfirst, zpow);
  if (zpow != 0) {
    if (!first) out << "*";
    out << "z^" << zpow;
    first = false;
  }
  std::string b = body.str();
  if (!b.empty()) {
    if (!first) out << "*";
    out << b;
    first = false;
  }
  for (const auto& a : atoms_) {
    if (!first) out << "*";
    first = false;
    out << "atom(" << fmt_cplx_token(a.atom.point) << "," << fmt_double(a.atom.mass, "%.12g") << ")";
    if (a.exponent != 1) out << "^" << a.exponent;
  }
  if (first) out << "1";
  return out.str();
}

namespace {

bool symbols_equal(const BoundarySymbol& x, const BoundarySymbol& y) {
  if (x.atoms().size() != y.atoms().size()) return false;
  for (std::size_t i = 0; i < x.atoms().size(); ++i) {
    const auto& ax = x.atoms()[i];
    const auto& ay = y.atoms()[i];
    if (ax.exponent != ay.exponent || std::abs(ax.atom.point - ay.atom.point) > 1e-12 ||
        std::abs(ax.atom.mass - ay.atom.mass) > 1e-12)
      return false;
  }
  return x.rational().distance_to(y.rational()) <= 1e-12;
}

}  // namespace

SymbolPair::SymbolPair(BoundarySymbol a, BoundarySymbol b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.is_zero() || b_.is_zero())
    fail(ErrorCode::DegeneratePair, "both symbols of a pair must be nonzero");
  if (!a_.bounded_on_circle() || !b_.bounded_on_circle())
    fail(ErrorCode::DegeneratePair, "pair symbols must be bounded on the circle (no boundary poles)");
  if (symbols_equal(a_, b_))
    fail(ErrorCode::DegeneratePair, "a - b vanishes identically");
}

PolynomialPair to_polynomial_pair(const SymbolPair& pair) {
  if (!pair.is_rational())
    fail(ErrorCode::UnsupportedSymbol, "pair with singular atoms has no polynomial normal form");
  const RationalFn& a = pair.a().rational();
  const RationalFn& b = pair.b().rational();
  // multiply both symbols by eta = den(a) * den(b), then cancel
  FactoredPoly p1 = a.num() * b.den();
  FactoredPoly p2 = b.num() * a.den();
  FactoredPoly common = cancel_common(p1, p2);
  PolynomialPair out;
  // normalize p1 to leading 1 by scaling both (kernels are scale-invariant)
  cplx l1 = p1.leading();
  out.multiplier = RationalFn((a.den() * b.den()).scaled(1.0 / l1), common);
  out.p1 = p1.scaled(1.0 / l1);
  out.p2 = p2.scaled(1.0 / l1);
  return out;
}

}  // namespace pk
