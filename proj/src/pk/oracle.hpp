#pragma once

#include <Eigen/Dense>
#include <functional>

#include "pk/symbols.hpp"

namespace pk {

struct OracleConfig {
  int grid_N = 4096;    // power of two
  int cutoff_M = 128;   // analytic trial degree
  int buffer_K = 64;    // extra output frequencies beyond the trial degree
  double rank_tol = 1e-7;      // relative singular-value threshold
  double residual_tol = 1e-6;  // membership residual threshold

  void validate() const;
};

// Half-step offset grid z_k = exp(2*pi*i*(k+offset)/N); the offset keeps
// symbol zeros and atoms at roots of unity off the sample points.
std::vector<cplx> circle_grid(int n, double offset = 0.5);

void fft_inplace(std::vector<cplx>& a, bool inverse);

// Laurent coefficients indexed by FFT bin; signed_freq maps bin -> frequency
// in [-N/2, N/2).
int signed_freq(int bin, int n);
std::vector<cplx> spectrum(const std::vector<cplx>& samples, double offset = 0.5);
std::vector<cplx> samples_from_spectrum(const std::vector<cplx>& spec, double offset = 0.5);

// Riesz projections: '+' keeps frequencies >= 0, '-' the strictly negative.
std::vector<cplx> project(const std::vector<cplx>& samples, char sign, double offset = 0.5);

// Grid values of a symbol; throws PoleOnGrid when a sample point sits on a
// pole or atom of the symbol.
std::vector<cplx> grid_values(const BoundarySymbol& sym, const std::vector<cplx>& grid);

// a * P+f + b * P-f sampled on the grid.
std::vector<cplx> apply_paired(const SymbolPair& pair, const std::vector<cplx>& f_samples,
                               const OracleConfig& cfg, double offset = 0.5);

using CircleFn = std::function<cplx(cplx)>;

// A sum of boundary symbols; the structured form the oracle can project
// semi-analytically when singular atoms are involved.
using SymbolSum = std::vector<BoundarySymbol>;

// ||P+((a/b) phi)|| / ||phi|| . The callable overload samples on the grid
// (spectrally accurate for the rational class). The structured overload
// switches to exact atom coefficient series when atoms are present: grid
// sampling of an essential singularity aliases its slowly decaying
// coefficients across the whole spectrum, so the boundary series of each
// atom factor is generated by the Laguerre recurrence instead and convolved
// with the geometrically decaying rational part.
double toeplitz_residual(const SymbolPair& pair, const CircleFn& phi, const OracleConfig& cfg);
double toeplitz_residual(const SymbolPair& pair, const SymbolSum& phi, const OracleConfig& cfg);

// Taylor coefficients c_0..c_{count-1} of exp(mass*(z+point)/(z-point));
// the boundary series of the conjugate is the reflected conjugate sequence.
std::vector<cplx> atom_coefficients(const SingularInnerAtom& atom, int count);

struct CoeffWindow {
  int lo = 0;  // frequency of c[0]
  std::vector<cplx> c;

  cplx at(int freq) const {
    int i = freq - lo;
    return i >= 0 && i < int(c.size()) ? c[std::size_t(i)] : cplx(0.0);
  }
};

// Laurent coefficients of a sum of (rational * atom^{+-1}) terms. Terms may
// carry at most one distinct atom point each.
CoeffWindow symbol_sum_coefficients(const SymbolSum& terms, const OracleConfig& cfg);

struct NumericKernel {
  int dim = 0;
  Eigen::MatrixXcd basis_samples;  // grid samples, one column per kernel vector
  std::vector<double> singular_values;
  double offset = 0.5;
};

// Brute-force kernel of f -> P+((a/b) f) on the trial space
// span{ z^j * F0 : 0 <= j <= cutoff_M }, observed through the output
// frequencies 0..cutoff_M+buffer_K (tall rectangular section). F0 defaults
// to 1; passing the expected common factor lets the caller test a predicted
// basis reading directly.
NumericKernel numeric_kernel(const SymbolPair& pair, const OracleConfig& cfg,
                             const RationalFn* trial_factor = nullptr);

// Principal angles (ascending, radians) between the column spans; columns
// are grid samples compared in the mean-square inner product.
std::vector<double> principal_angles(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);
double max_principal_angle(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace pk
