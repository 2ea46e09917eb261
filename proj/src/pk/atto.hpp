#pragma once

#include "pk/kernels.hpp"

namespace pk {

struct BoundaryPoint {
  cplx t;
  int order = 1;  // pole order n_j >= 1
};

// Data of a finite-rank truncated-operator symbol between two model spaces:
// phi = conj(theta) R2+ - alpha R1-, assembled from rational tails and local
// expansions at regular boundary points.
struct AttoSpec {
  BlaschkeProduct theta;
  BlaschkeProduct alpha;
  RationalFn r_plus = RationalFn::zero();   // poles exterior, vanishing at infinity
  RationalFn r_minus = RationalFn::zero();  // poles in the disk, vanishing at infinity
  std::vector<BoundaryPoint> points;

  void validate() const;
};

struct AttoSymbolParts {
  RationalFn r2_plus, r1_minus;
  FactoredPoly e_factor, d1_minus, d2_plus;      // factored forms
  ComplexPoly e_poly, d1_poly, d2_poly, q1, q2;  // expanded views
  std::vector<ComplexPoly> taylor_alpha, taylor_thetabar;
  int m = 0, n_plus = 0, n_minus = 0, n_circle = 0;
};

AttoSymbolParts build_symbol(const AttoSpec& spec);

// The two evaluations of the symbol: the local-expansion sum and the
// assembled product form. They agree pointwise; the tests pin that down.
cplx atto_phi_sum_form(const AttoSpec& spec, const AttoSymbolParts& parts, cplx z);
cplx atto_phi_product_form(const AttoSpec& spec, const AttoSymbolParts& parts, cplx z);

// Closed-form kernel E * D1- * D2+ * ker T_{conj(theta) z^m}; does not use
// alpha beyond the dim K_alpha >= m precondition and is recorded as such.
KernelBasis atto_kernel(const AttoSpec& spec);

// Takenaka-Malmquist orthonormal basis of the model space of theta.
std::vector<RationalFn> model_space_basis(const BlaschkeProduct& theta);

// Compression matrix <phi e_j, f_i> from the model space of theta into the
// model space of alpha, by grid quadrature.
Eigen::MatrixXcd atto_compression_matrix(const AttoSpec& spec, const BlaschkeProduct& alpha,
                                         const OracleConfig& cfg);

struct AttoNumericKernel {
  int dim = 0;
  Eigen::MatrixXcd samples;  // grid samples of the numeric kernel functions
};

// SVD kernel of the compression matrix, mapped back to functions in the
// model space of theta.
AttoNumericKernel atto_numeric_kernel(const AttoSpec& spec, const BlaschkeProduct& alpha,
                                      const OracleConfig& cfg);

struct AttoVerification {
  int numeric_dim = 0;
  double max_angle = 0.0;
  double phi_form_agreement = 0.0;  // max pointwise gap between the two forms
  bool ok = false;
};

AttoVerification verify_atto(const AttoSpec& spec, const KernelBasis& basis,
                             const OracleConfig& cfg);

// Numeric kernel of the compression for another admissible alpha, compared
// against the analytic basis.
double alpha_independence_angle(const AttoSpec& spec, const BlaschkeProduct& second_alpha,
                                const KernelBasis& basis, const OracleConfig& cfg);

}  // namespace pk
