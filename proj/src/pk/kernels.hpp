#pragma once

#include <optional>

#include "pk/oracle.hpp"
#include "pk/symbols.hpp"

namespace pk {

struct TraceEntry {
  std::string rule;
  std::string ref;  // stable anchor into docs/RULES.md
};

// Exact kernel representation F * P_{span_dim - 1}: a rational common factor
// times a polynomial span. span_dim == 0 is the zero space.
struct KernelBasis {
  RationalFn factor = RationalFn::one();
  int span_dim = 0;
  std::vector<TraceEntry> trace;

  bool empty() const { return span_dim == 0; }
  RationalFn element(int j) const;  // F * z^j, 0 <= j < span_dim
};

// Basis of a projection onto the antianalytic side: factor * conj(z)^j.
struct KernelBasisMinus {
  RationalFn factor = RationalFn::one();
  int span_dim = 0;
  std::vector<TraceEntry> trace;

  bool empty() const { return span_dim == 0; }
  RationalFn element(int j) const;  // factor / z^j
};

// Full kernel element phi = phi_plus + phi_minus with a phi_plus + b phi_minus = 0.
struct KernelElement {
  RationalFn plus;
  RationalFn minus;
  SymbolPair pair;
};

// Kernel of the polynomial pair (p1, p2): dimension counted from the root
// regions, basis factor F = p2T * p2E / p1E. The printed variant without the
// division by p1 fails the analyticity requirement whenever p1 has exterior
// roots; see docs/RULES.md#kernel-factor-construction.
KernelBasis polynomial_pair_kernel(const FactoredPoly& p1, const FactoredPoly& p2);

// Projected kernel of a rational nondegenerate pair, via the polynomial
// normal form. When the symbols carry Blaschke-factor structure the result
// is cross-checked against the multiplier rewriting route.
KernelBasis kernel_plus(const SymbolPair& pair);

// Antianalytic projection, computed from the conjugate-swapped pair.
KernelBasisMinus kernel_minus(const SymbolPair& pair);

// Lift a member of the projected kernel to a full kernel element.
KernelElement lift(const RationalFn& phi_plus, const SymbolPair& pair);

// Coordinates of f in the basis {F z^j}, or nullopt when f is not in the
// span (common-denominator reduction followed by a linear solve).
std::optional<std::vector<cplx>> span_coordinates(const KernelBasis& basis, const RationalFn& f,
                                                  double tol = kMembershipTol);

// Does eta map every member it keeps inside Hardy space back into the span?
// Checks the full subspace {f in span : eta f analytic}, not just the
// monomial generators.
bool near_invariance_check(const KernelBasis& basis, const RationalFn& eta);

// Dimension after multiplying the analytic symbol by an inner factor with a
// k-dimensional model space: max(d - k, 0).
int dim_after_inner(int d, int k);

struct Decomposition {
  std::vector<KernelElement> psis;  // psi_j with psi_j(0) = 1
  KernelBasis reduced;              // kernel of (a z^k, b)
};

// Peel k origin-normalized directions off the kernel:
// span = z^k * reduced  (+)  span{psi_0, z psi_1, ..., z^{k-1} psi_{k-1}}.
Decomposition decompose(const SymbolPair& pair, int k);

// Symbol of the minimal Toeplitz kernel containing phi: conj(z) * conj(I) *
// conj(O)/O for the inner-outer split phi = I O.
BoundarySymbol minimal_kernel_symbol_of(const RationalFn& phi_plus);

// A maximal function for the kernel: an outer combination F*q whose minimal
// kernel reproduces the span, validated by the round-trip.
RationalFn maximal_function(const KernelBasis& basis, std::uint64_t seed = 12345);

struct MinimalKernel {
  BoundarySymbol symbol;
  std::optional<KernelBasis> basis;   // absent for symbols with singular atoms
  std::optional<RationalFn> maximal;  // b * (maximal function of ker T_a)
  std::vector<TraceEntry> trace;
};

// Minimal Toeplitz kernel containing b * ker T_a, with symbol a*conj(b)/b_o.
MinimalKernel minimal_kernel_containing(const RationalFn& b, const BoundarySymbol& a,
                                        std::uint64_t seed = 12345);

// Grid sample matrix of the basis elements (column per element).
Eigen::MatrixXcd basis_samples(const KernelBasis& basis, const std::vector<cplx>& grid);

struct KernelVerification {
  int oracle_dim = 0;
  double max_angle = 0.0;
  double residual = 0.0;
  bool ok = false;
};

// Independent numerical confirmation of an engine result: kernel dimension
// by SVD, span agreement by principal angles, membership residuals.
KernelVerification verify_kernel(const SymbolPair& pair, const KernelBasis& basis,
                                 const OracleConfig& cfg);

SymbolPair pair_with_one(const BoundarySymbol& a);

}  // namespace pk
