#pragma once

#include "pk/kernels.hpp"

namespace pk {

// Multiplier rewriting route: consumes the Blaschke-factor structure recorded
// on the pair's symbols and reduces to a polynomial pair through the
// split B = B_minus z^k B_plus, collecting the analytic/antianalytic
// multipliers on the basis factor. Independent of the direct normal form;
// kernel_plus uses it as a cross-check when structure is present.
KernelBasis kernel_plus_via_rules(const SymbolPair& pair);

// Kernel of (alpha * p1, p2) or (conj(alpha) * p1, p2) for a finite Blaschke
// product alpha, via the split route.
KernelBasis structured_blaschke_kernel(const BlaschkeProduct& alpha, bool conjugated,
                                       const FactoredPoly& p1, const FactoredPoly& p2);

// Replace circle zeros of p1 by a power of z; valid when p2 has no circle
// zeros (the quotient symbol stays bounded).
std::pair<FactoredPoly, FactoredPoly> circle_zero_shift(const FactoredPoly& p1,
                                                        const FactoredPoly& p2);

// Rational membership tests for the invertible multiplier classes.
bool invertible_analytic(const RationalFn& h);      // zeros and poles exterior
bool invertible_antianalytic(const RationalFn& h);  // zeros and poles in the disk, finite at inf

}  // namespace pk
