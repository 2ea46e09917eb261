#pragma once

#include "pk/blaschke.hpp"
#include "pk/rational.hpp"

namespace pk {

class BoundarySymbol;

// All roots of p via companion-matrix eigenvalues with one Newton polish
// step; near-coincident roots are merged into multiplicities and the result
// is region-classified. Throws IllConditioned when the factorization fails
// to reproduce p to 1e-6 relative accuracy.
FactoredPoly roots(const ComplexPoly& p, double tol = kClassifyTol);

struct InnerOuter {
  BlaschkeProduct inner;  // disk zeros of f, including the z^k part
  RationalFn outer;       // no zeros in the disk, |outer| = |f| on the circle
};

// Inner-outer factorization of a rational function analytic in the closed
// disk. Circle zeros stay with the outer factor.
InnerOuter inner_outer(const RationalFn& f);

// Taylor polynomial of the symbol at a regular boundary point, expanded in
// the monomial basis. Derivatives are computed by exact jet arithmetic
// (power-series products, quotients and exponentials), never by finite
// differences.
ComplexPoly taylor_at(const BoundarySymbol& sym, cplx t, int order);

// Jet helpers (truncated power series at a point), exposed for the modules
// that assemble symbols from local expansions.
using Jet = std::vector<cplx>;
Jet jet_mul(const Jet& a, const Jet& b);
Jet jet_inv(const Jet& a);
Jet jet_exp(const Jet& g);
Jet jet_of_factored(const FactoredPoly& p, cplx t, int order);
Jet jet_of_rational(const RationalFn& f, cplx t, int order);

}  // namespace pk
