#include "pk/kernels.hpp"

#include <algorithm>
#include <sstream>

#include "pk/error.hpp"
#include "pk/factor.hpp"
#include "pk/rng.hpp"
#include "pk/rules.hpp"

namespace pk {

namespace {

cplx pow_int(cplx z, int e) {
  cplx acc = 1.0;
  for (int i = 0; i < e; ++i) acc *= z;
  return acc;
}

}  // namespace

RationalFn KernelBasis::element(int j) const {
  if (j < 0 || j >= span_dim) fail(ErrorCode::Internal, "basis index out of range");
  return factor * RationalFn::z_power(j);
}

RationalFn KernelBasisMinus::element(int j) const {
  if (j < 0 || j >= span_dim) fail(ErrorCode::Internal, "basis index out of range");
  return factor * RationalFn::z_power(-j);
}

SymbolPair pair_with_one(const BoundarySymbol& a) { return SymbolPair(a, BoundarySymbol()); }

KernelBasis polynomial_pair_kernel(const FactoredPoly& p1, const FactoredPoly& p2) {
  if (p1.is_zero() || p2.is_zero()) fail(ErrorCode::DegeneratePair, "zero polynomial in a pair");
  for (const auto& r : p1.roots())
    if (p2.has_root_near(r.z, kCancelTol))
      fail(ErrorCode::NotCoprime, "pair polynomials share a root near " + fmt_cplx_token(r.z));

  RegionSplit s1 = split_regions(p1);
  RegionSplit s2 = split_regions(p2);
  int n2 = p2.degree();
  int m = s2.n_circle + s1.n_circle + s2.n_exterior + s1.n_disk;

  KernelBasis kb;
  std::ostringstream counts;
  counts << "root counts (D,T,E): p1=(" << s1.n_disk << "," << s1.n_circle << "," << s1.n_exterior
         << "), p2=(" << s2.n_disk << "," << s2.n_circle << "," << s2.n_exterior << ")";
  kb.trace.push_back({counts.str(), "region-dimension-count"});

  if (n2 <= m) {
    kb.span_dim = 0;
    kb.factor = RationalFn::one();
    std::ostringstream msg;
    msg << "dim = 0 since n2 = " << n2 << " <= m = " << m;
    kb.trace.push_back({msg.str(), "region-dimension-count"});
    return kb;
  }
  kb.span_dim = n2 - m;
  kb.factor = RationalFn(s2.circle * s2.exterior, s1.exterior);
  std::ostringstream msg;
  msg << "dim = n2 - m = " << n2 << " - " << m << " = " << kb.span_dim
      << " (equivalently n2D - n1D - n1T)";
  kb.trace.push_back({msg.str(), "region-dimension-count"});
  kb.trace.push_back({"basis factor F = p2T p2E / p1E", "kernel-factor-construction"});
  return kb;
}

KernelBasis kernel_plus(const SymbolPair& pair) {
  if (!pair.is_rational())
    fail(ErrorCode::UnsupportedSymbol, "projected kernels require rational symbols");
  PolynomialPair pp = to_polynomial_pair(pair);
  KernelBasis kb = polynomial_pair_kernel(pp.p1, pp.p2);
  kb.trace.insert(kb.trace.begin(),
                  {"normalized to a coprime polynomial pair by a common multiplier",
                   "pair-normalization"});

  if (!pair.a().blaschke_hints().empty() || !pair.b().blaschke_hints().empty()) {
    KernelBasis via_rules = kernel_plus_via_rules(pair);
    if (via_rules.span_dim != kb.span_dim)
      fail(ErrorCode::VerificationMismatch,
           "rewriting route dimension disagrees with the polynomial normal form");
    for (int j = 0; j < kb.span_dim; ++j) {
      if (!span_coordinates(via_rules, kb.element(j), 1e-7) ||
          !span_coordinates(kb, via_rules.element(j), 1e-7))
        fail(ErrorCode::VerificationMismatch,
             "rewriting route span disagrees with the polynomial normal form");
    }
    for (auto& t : via_rules.trace) kb.trace.push_back({"[rewrite] " + t.rule, t.ref});
    kb.trace.push_back({"both routes agree on the kernel subspace", "route-coherence"});
  }
  return kb;
}

KernelBasisMinus kernel_minus(const SymbolPair& pair) {
  SymbolPair swapped(pair.b().conj_on_circle(), pair.a().conj_on_circle());
  KernelBasis kp = kernel_plus(swapped);
  KernelBasisMinus km;
  km.span_dim = kp.span_dim;
  km.factor = kp.factor.conj_on_circle() * RationalFn::z_power(-1);
  km.trace = kp.trace;
  km.trace.push_back(
      {"antianalytic projection as conj(z) * conjugates of the swapped conjugate pair",
       "minus-from-plus"});
  return km;
}

std::optional<std::vector<cplx>> span_coordinates(const KernelBasis& basis, const RationalFn& f,
                                                  double tol) {
  if (f.is_zero()) return std::vector<cplx>(std::size_t(basis.span_dim), cplx(0.0));
  if (basis.empty()) return std::nullopt;
  // f = sum_j lambda_j F z^j  <=>  fN * FD = q(z) * FN * fD with deg q < d
  ComplexPoly lhs = f.num().expand() * basis.factor.den().expand();
  ComplexPoly base = basis.factor.num().expand() * f.den().expand();
  int d = basis.span_dim;
  int rows = std::max(lhs.degree(), base.degree() + d - 1) + 1;
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(rows, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i <= base.degree(); ++i) a(i + j, j) = base[i];
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(rows);
  for (int i = 0; i <= lhs.degree(); ++i) c(i) = lhs[i];
  Eigen::VectorXcd sol = a.colPivHouseholderQr().solve(c);
  double res = (a * sol - c).norm();
  if (res > tol * (1.0 + c.norm())) return std::nullopt;
  std::vector<cplx> out(std::size_t(d), cplx(0.0));
  for (int j = 0; j < d; ++j) out[std::size_t(j)] = sol(j);
  return out;
}

KernelElement lift(const RationalFn& phi_plus, const SymbolPair& pair) {
  if (!pair.is_rational())
    fail(ErrorCode::UnsupportedSymbol, "lifting requires rational symbols");
  KernelBasis kb = kernel_plus(pair);
  if (!span_coordinates(kb, phi_plus, 1e-7))
    fail(ErrorCode::NotInKernel, "the function is not in the projected kernel");
  RationalFn minus = -(pair.a().rational() / pair.b().rational()) * phi_plus;
  return KernelElement{phi_plus, minus, pair};
}

bool near_invariance_check(const KernelBasis& basis, const RationalFn& eta) {
  if (basis.empty()) return true;
  if (eta.is_zero()) return true;
  int d = basis.span_dim;
  RationalFn r = eta * basis.factor;

  // q must cancel every pole of r*q inside the closed disk for eta*F*q to
  // stay analytic; those conditions are linear in the coefficients of q.
  std::vector<std::pair<cplx, int>> bad;
  for (const auto& root : r.den().roots())
    if (root.region != Region::Exterior) bad.emplace_back(root.z, root.mult);

  Eigen::MatrixXcd constraints = Eigen::MatrixXcd::Zero(0, d);
  int row = 0;
  for (const auto& [z0, mult] : bad) row += mult;
  if (row > 0) {
    constraints.resize(row, d);
    constraints.setZero();
    int i = 0;
    for (const auto& [z0, mult] : bad) {
      for (int der = 0; der < mult; ++der, ++i) {
        for (int j = der; j < d; ++j) {
          double falling = 1.0;
          for (int t = 0; t < der; ++t) falling *= double(j - t);
          constraints(i, j) = falling * pow_int(z0, j - der);
        }
      }
    }
  }

  Eigen::MatrixXcd null_basis;
  if (row == 0) {
    null_basis = Eigen::MatrixXcd::Identity(d, d);
  } else {
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(constraints);
    lu.setThreshold(1e-10);
    null_basis = lu.kernel();
    if (null_basis.cols() == 1 && null_basis.isZero(0.0)) return true;  // nothing stays analytic
  }

  for (int c = 0; c < null_basis.cols(); ++c) {
    std::vector<cplx> qc(std::size_t(d), cplx(0.0));
    double scale = 0.0;
    for (int j = 0; j < d; ++j) {
      qc[std::size_t(j)] = null_basis(j, c);
      scale = std::max(scale, std::abs(qc[std::size_t(j)]));
    }
    if (scale == 0.0) continue;
    ComplexPoly q(qc);
    if (q.is_zero()) continue;
    RationalFn candidate = r * RationalFn::from(roots(q));
    if (!candidate.in_hardy_plus()) continue;  // constraint solve was not exact enough to apply
    if (!span_coordinates(basis, candidate)) return false;
  }
  return true;
}

int dim_after_inner(int d, int k) {
  if (d < 0 || k < 1) fail(ErrorCode::ParseError, "need d >= 0 and k >= 1");
  return k >= d ? 0 : d - k;
}

Decomposition decompose(const SymbolPair& pair, int k) {
  if (k < 1) fail(ErrorCode::ParseError, "k must be positive");
  KernelBasis kb = kernel_plus(pair);
  if (kb.empty()) fail(ErrorCode::EmptyKernel, "cannot decompose the zero kernel");
  if (kb.span_dim < k)
    fail(ErrorCode::KernelTooSmall, "reduction bottoms out: kernel dimension " +
                                        std::to_string(kb.span_dim) + " < k = " + std::to_string(k));
  cplx f0 = kb.factor.eval(0.0);
  RationalFn psi = kb.factor.scaled(1.0 / f0);

  Decomposition out;
  for (int j = 0; j < k; ++j) {
    SymbolPair shifted(pair.a() * BoundarySymbol(RationalFn::z_power(j)), pair.b());
    out.psis.push_back(lift(psi, shifted));
  }
  try {
    SymbolPair reduced_pair(pair.a() * BoundarySymbol(RationalFn::z_power(k)), pair.b());
    out.reduced = kernel_plus(reduced_pair);
  } catch (const Error& e) {
    // a z^k can land exactly on b; that pair is the identity operator up to
    // a nonvanishing multiplier, so the reduced kernel is trivial
    if (e.code() != ErrorCode::DegeneratePair) throw;
    out.reduced = KernelBasis{};
    out.reduced.trace.push_back(
        {"reduction reached the identity pair: trivial kernel", "origin-peeling"});
  }
  if (out.reduced.span_dim + k != kb.span_dim)
    fail(ErrorCode::Internal, "direct sum dimensions do not add up");
  out.reduced.trace.push_back(
      {"peeled " + std::to_string(k) + " origin-normalized directions", "origin-peeling"});
  return out;
}

BoundarySymbol minimal_kernel_symbol_of(const RationalFn& phi_plus) {
  if (phi_plus.is_zero()) fail(ErrorCode::NotInHardySpace, "the zero function has no minimal kernel");
  if (!phi_plus.in_hardy_plus())
    fail(ErrorCode::NotInHardySpace, "function has poles in the closed disk");
  InnerOuter io = inner_outer(phi_plus);
  RationalFn inner_rat = io.inner.to_rational();
  RationalFn s = RationalFn::z_power(-1) * inner_rat.conj_on_circle() *
                 io.outer.conj_on_circle() / io.outer;
  return BoundarySymbol(s);
}

namespace {

bool subspace_equal(const KernelBasis& x, const KernelBasis& y) {
  if (x.span_dim != y.span_dim) return false;
  for (int j = 0; j < x.span_dim; ++j) {
    if (!span_coordinates(y, x.element(j), 1e-7)) return false;
    if (!span_coordinates(x, y.element(j), 1e-7)) return false;
  }
  return true;
}

}  // namespace

RationalFn maximal_function(const KernelBasis& basis, std::uint64_t seed) {
  if (basis.empty()) fail(ErrorCode::EmptyKernel, "the zero kernel has no maximal function");
  int d = basis.span_dim;
  auto try_candidate = [&](const ComplexPoly& q) -> std::optional<RationalFn> {
    RationalFn cand = basis.factor * RationalFn::from(roots(q));
    InnerOuter io = inner_outer(cand);
    if (io.inner.degree() != 0) return std::nullopt;  // needs a trivial inner factor
    BoundarySymbol s = minimal_kernel_symbol_of(cand);
    KernelBasis round = kernel_plus(pair_with_one(s));
    if (!subspace_equal(round, basis)) return std::nullopt;
    return cand;
  };

  std::vector<cplx> ones(std::size_t(d), 1.0);
  if (auto c = try_candidate(ComplexPoly(ones))) return *c;
  Rng rng(seed);
  for (int attempt = 0; attempt < 50; ++attempt) {
    std::vector<cplx> qc(std::size_t(d), cplx(0.0));
    for (auto& x : qc) x = rng.disk(0.2, 1.0);
    qc[0] = 1.0;
    if (auto c = try_candidate(ComplexPoly(qc))) return *c;
  }
  fail(ErrorCode::Internal, "no maximal function found after randomized trials");
}

MinimalKernel minimal_kernel_containing(const RationalFn& b, const BoundarySymbol& a,
                                        std::uint64_t seed) {
  if (b.is_zero() || !b.in_hardy_plus())
    fail(ErrorCode::NotInHardySpace, "b must be a nonzero analytic rational function");
  InnerOuter io = inner_outer(b);

  MinimalKernel out;
  out.symbol = a * BoundarySymbol(b.conj_on_circle() / io.outer);
  out.trace.push_back({"symbol = a conj(b) / b_o with b = b_i b_o", "minimal-kernel-symbol"});

  if (!a.is_rational()) {
    out.trace.push_back(
        {"symbol has singular inner factors: kernel not finite-dimensional in the rational class",
         "minimal-kernel-symbol"});
    return out;
  }

  KernelBasis ka = kernel_plus(pair_with_one(a));
  if (ka.empty()) fail(ErrorCode::EmptyKernel, "ker T_a is trivial");
  KernelBasis kmin = kernel_plus(pair_with_one(out.symbol));

  for (int j = 0; j < ka.span_dim; ++j) {
    RationalFn lifted = b * ka.element(j);
    if (!lifted.in_hardy_plus())
      fail(ErrorCode::NotContained, "b * ker T_a leaves the analytic Hardy space");
    if (!span_coordinates(kmin, lifted, 1e-7))
      fail(ErrorCode::VerificationMismatch, "containment b ker T_a in the minimal kernel failed");
  }
  out.trace.push_back({"containment of b ker T_a verified element-wise", "minimal-kernel-symbol"});

  RationalFn phim = maximal_function(ka, seed);
  RationalFn transferred = b * phim;
  BoundarySymbol s2 = minimal_kernel_symbol_of(transferred);
  KernelBasis round = kernel_plus(pair_with_one(s2));
  if (round.span_dim != kmin.span_dim)
    fail(ErrorCode::VerificationMismatch,
         "minimal kernel of b * (maximal function) has a different dimension");
  out.maximal = transferred;
  out.basis = kmin;
  out.trace.push_back({"b * (maximal function of ker T_a) is maximal for the result",
                       "maximal-function-transfer"});
  return out;
}

Eigen::MatrixXcd basis_samples(const KernelBasis& basis, const std::vector<cplx>& grid) {
  Eigen::MatrixXcd m(int(grid.size()), basis.span_dim);
  for (int j = 0; j < basis.span_dim; ++j) {
    RationalFn e = basis.element(j);
    for (std::size_t k = 0; k < grid.size(); ++k) m(int(k), j) = e.eval(grid[k]);
  }
  return m;
}

KernelVerification verify_kernel(const SymbolPair& pair, const KernelBasis& basis,
                                 const OracleConfig& cfg) {
  KernelVerification v;
  // independent trial factor 1/p1E from the input's own root classification
  PolynomialPair pp = to_polynomial_pair(pair);
  RationalFn trial(FactoredPoly(), split_regions(pp.p1).exterior);
  NumericKernel nk = numeric_kernel(pair, cfg, &trial);
  v.oracle_dim = nk.dim;
  if (nk.dim > 0 && basis.span_dim > 0) {
    auto grid = circle_grid(cfg.grid_N, nk.offset);
    v.max_angle = max_principal_angle(basis_samples(basis, grid), nk.basis_samples);
  }
  double residual = 0.0;
  for (int j = 0; j < basis.span_dim; ++j) {
    RationalFn e = basis.element(j);
    residual = std::max(residual,
                        toeplitz_residual(pair, [&e](cplx z) { return e.eval(z); }, cfg));
  }
  v.residual = residual;
  v.ok = v.oracle_dim == basis.span_dim && v.max_angle <= 1e-6 && v.residual <= cfg.residual_tol;
  return v;
}

}  // namespace pk
