#pragma once

#include <optional>
#include <string>

#include "pk/blaschke.hpp"
#include "pk/rational.hpp"

namespace pk {

// exp(mass * (z + point)/(z - point)): inner with one singular point mass on
// the circle, unimodular a.e. on the boundary.
struct SingularInnerAtom {
  cplx point;
  double mass = 1.0;

  SingularInnerAtom(cplx p, double m);
  cplx eval(cplx z) const;
};

struct AtomPower {
  SingularInnerAtom atom;
  int exponent = 1;  // +1 or -1
};

// Structure annotation kept alongside the rational value so the rewriting
// engine can replay multiplication by (conjugated) Blaschke factors.
struct BlaschkeHint {
  BlaschkeProduct factor;
  bool conjugated = false;
};

// Boundary symbol: rational function of z times singular inner atoms with
// exponents +-1. Closed under products, quotients and boundary conjugation.
class BoundarySymbol {
 public:
  BoundarySymbol() = default;  // the constant 1
  explicit BoundarySymbol(RationalFn rational) : rational_(std::move(rational)) {}

  static BoundarySymbol from_poly(FactoredPoly p) { return BoundarySymbol(RationalFn::from(std::move(p))); }
  static BoundarySymbol from_blaschke(const BlaschkeProduct& b, bool conjugated = false);
  static BoundarySymbol from_atom(const SingularInnerAtom& a, int exponent);

  const RationalFn& rational() const { return rational_; }
  const std::vector<AtomPower>& atoms() const { return atoms_; }
  const std::vector<BlaschkeHint>& blaschke_hints() const { return hints_; }
  bool is_rational() const { return atoms_.empty(); }
  bool is_zero() const { return rational_.is_zero(); }
  bool bounded_on_circle() const { return rational_.bounded_on_circle(); }

  cplx eval(cplx z) const;

  BoundarySymbol operator*(const BoundarySymbol& o) const;
  BoundarySymbol operator/(const BoundarySymbol& o) const;
  BoundarySymbol conj_on_circle() const;

  // Canonical product-of-factors rendering; stable across runs, used for the
  // exact-token comparisons in reports.
  std::string token() const;

 private:
  void merge_atoms();
  RationalFn rational_;
  std::vector<AtomPower> atoms_;
  std::vector<BlaschkeHint> hints_;
};

// Nondegenerate pair (a, b): a, b bounded on the circle, and a, b, a-b all
// nonzero a.e.
class SymbolPair {
 public:
  SymbolPair(BoundarySymbol a, BoundarySymbol b);
  const BoundarySymbol& a() const { return a_; }
  const BoundarySymbol& b() const { return b_; }
  bool is_rational() const { return a_.is_rational() && b_.is_rational(); }

 private:
  BoundarySymbol a_, b_;
};

struct PolynomialPair {
  FactoredPoly p1, p2;
  RationalFn multiplier;  // the factor eta with (a,b)*eta = (p1,p2); trace only
};

// Clear denominators and cancel common roots: a coprime polynomial pair with
// the same projected kernel as (a, b). Atom-bearing pairs are rejected.
PolynomialPair to_polynomial_pair(const SymbolPair& pair);

}  // namespace pk
