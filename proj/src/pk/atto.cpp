#include "pk/atto.hpp"

#include <sstream>

#include "pk/error.hpp"
#include "pk/factor.hpp"

namespace pk {

void AttoSpec::validate() const {
  if (!r_plus.is_zero()) {
    if (r_plus.den().count(Region::Disk) > 0 || r_plus.den().count(Region::Circle) > 0)
      fail(ErrorCode::PoleRegionViolation, "r_plus must have exterior poles only");
    if (!r_plus.vanishes_at_infinity())
      fail(ErrorCode::PoleRegionViolation, "r_plus must vanish at infinity");
  }
  if (!r_minus.is_zero()) {
    if (r_minus.den().count(Region::Exterior) > 0 || r_minus.den().count(Region::Circle) > 0)
      fail(ErrorCode::PoleRegionViolation, "r_minus must have poles in the disk only");
    if (!r_minus.vanishes_at_infinity())
      fail(ErrorCode::PoleRegionViolation, "r_minus must vanish at infinity");
  }
  for (const auto& p : points) {
    if (p.order < 1) fail(ErrorCode::ParseError, "boundary point order must be >= 1");
    if (std::abs(std::abs(p.t) - 1.0) > 1e-9)
      fail(ErrorCode::NotRegularPoint, "boundary points must lie on the unit circle");
  }
}

AttoSymbolParts build_symbol(const AttoSpec& spec) {
  spec.validate();
  AttoSymbolParts parts;
  BoundarySymbol alpha_sym(spec.alpha.to_rational());
  BoundarySymbol thetabar_sym(spec.theta.to_rational().conj_on_circle());

  parts.r2_plus = spec.r_plus;
  parts.r1_minus = spec.r_minus;
  parts.e_factor = FactoredPoly();
  for (const auto& p : spec.points) {
    cplx t = p.t / std::abs(p.t);
    ComplexPoly pa = taylor_at(alpha_sym, t, p.order - 1);
    ComplexPoly pt = taylor_at(thetabar_sym, t, p.order - 1);
    parts.taylor_alpha.push_back(pa);
    parts.taylor_thetabar.push_back(pt);
    FactoredPoly pole(1.0, {Root{t, p.order, Region::Circle}});
    parts.e_factor = parts.e_factor * pole;
    parts.r2_plus = parts.r2_plus + RationalFn(roots(pa), pole);
    // sign chosen so that conj(theta) R2+ - alpha R1- reproduces the
    // local-expansion form: the expansion numerators must cancel at each t_j
    parts.r1_minus = parts.r1_minus + RationalFn(roots(pt), pole);
  }

  parts.d2_plus = spec.r_plus.is_zero() ? FactoredPoly() : spec.r_plus.den().monic();
  parts.d1_minus = spec.r_minus.is_zero() ? FactoredPoly() : spec.r_minus.den().monic();
  parts.n_minus = parts.d2_plus.degree();
  parts.n_plus = parts.d1_minus.degree();
  parts.n_circle = parts.e_factor.degree();
  parts.m = parts.n_plus + parts.n_minus + parts.n_circle;

  parts.e_poly = parts.e_factor.expand();
  parts.d1_poly = parts.d1_minus.expand();
  parts.d2_poly = parts.d2_plus.expand();

  RationalFn q2 = parts.r2_plus * RationalFn::from(parts.e_factor * parts.d2_plus);
  RationalFn q1 = parts.r1_minus * RationalFn::from(parts.e_factor * parts.d1_minus);
  if (!q2.is_polynomial() || !q1.is_polynomial())
    fail(ErrorCode::Internal, "assembled tails are not polynomial over E*D");
  parts.q2 = q2.num().expand() * (cplx(1.0) / q2.den().leading());
  parts.q1 = q1.num().expand() * (cplx(1.0) / q1.den().leading());
  if (!parts.r2_plus.is_zero() && parts.q2.degree() >= parts.n_circle + parts.n_minus)
    fail(ErrorCode::Internal, "assembled analytic tail does not vanish at infinity");
  return parts;
}

cplx atto_phi_sum_form(const AttoSpec& spec, const AttoSymbolParts& parts, cplx z) {
  cplx tb = std::conj(spec.theta.eval(z / std::norm(z)));  // boundary conjugate on |z|=1
  cplx al = spec.alpha.eval(z);
  cplx acc = tb * spec.r_plus.eval(z) - al * spec.r_minus.eval(z);
  for (std::size_t j = 0; j < spec.points.size(); ++j) {
    cplx t = spec.points[j].t / std::abs(spec.points[j].t);
    int n = spec.points[j].order;
    cplx num = tb * parts.taylor_alpha[j].eval(z) - al * parts.taylor_thetabar[j].eval(z);
    cplx den = 1.0;
    for (int i = 0; i < n; ++i) den *= (z - t);
    acc += num / den;
  }
  return acc;
}

cplx atto_phi_product_form(const AttoSpec& spec, const AttoSymbolParts& parts, cplx z) {
  cplx tb = std::conj(spec.theta.eval(z / std::norm(z)));
  cplx al = spec.alpha.eval(z);
  return tb * parts.r2_plus.eval(z) - al * parts.r1_minus.eval(z);
}

KernelBasis atto_kernel(const AttoSpec& spec) {
  AttoSymbolParts parts = build_symbol(spec);
  if (spec.alpha.degree() < parts.m)
    fail(ErrorCode::AlphaTooSmall,
         "dim of the target model space is " + std::to_string(spec.alpha.degree()) +
             " but the formula needs at least m = " + std::to_string(parts.m));

  KernelBasis inner;
  int expected = std::max(spec.theta.degree() - parts.m, 0);
  if (expected == 0) {
    // the reduced symbol may collapse to a unimodular constant; its kernel
    // is trivial either way
    inner.span_dim = 0;
    inner.factor = RationalFn::one();
    inner.trace.push_back({"m >= deg theta: the reduced model space is trivial",
                           "model-space-dimension-arithmetic"});
  } else {
    BoundarySymbol lifted(spec.theta.to_rational().conj_on_circle() *
                          RationalFn::z_power(parts.m));
    inner = kernel_plus(pair_with_one(lifted));
    if (inner.span_dim != expected)
      fail(ErrorCode::Internal, "model-space reduction dimension mismatch");
  }

  KernelBasis out;
  out.span_dim = inner.span_dim;
  out.factor = RationalFn::from(parts.e_factor * parts.d1_minus * parts.d2_plus) * inner.factor;
  out.trace = inner.trace;
  std::ostringstream msg;
  msg << "kernel = E D1- D2+ ker T_{conj(theta) z^m}, m = " << parts.m << " = " << parts.n_plus
      << " + " << parts.n_minus << " + " << parts.n_circle;
  out.trace.push_back({msg.str(), "compressed-kernel-formula"});
  out.trace.push_back(
      {"result independent of the target model space once its dimension is >= m",
       "alpha-independence"});
  return out;
}

std::vector<RationalFn> model_space_basis(const BlaschkeProduct& theta) {
  if (theta.degree() < 1)
    fail(ErrorCode::ParseError, "model space basis needs a nonconstant inner function");
  std::vector<cplx> zs;
  for (const auto& z : theta.zeros())
    for (int i = 0; i < z.mult; ++i) zs.push_back(z.z);

  std::vector<RationalFn> basis;
  FactoredPoly num_acc;  // prod_{i<k} (z - a_i)
  FactoredPoly den_acc;  // prod_{i<k} (1 - conj(a_i) z)
  for (std::size_t k = 0; k < zs.size(); ++k) {
    cplx a = zs[k];
    FactoredPoly den_k = den_acc;
    if (a != cplx(0.0)) {
      cplx ca = std::conj(a);
      den_k = den_k * FactoredPoly(-ca, {Root{1.0 / ca, 1, Region::Exterior}});
    }
    double scale = std::sqrt(1.0 - std::norm(a));
    basis.push_back(RationalFn(num_acc.scaled(scale), den_k));
    num_acc = num_acc * FactoredPoly(1.0, {Root{a, 1, Region::Disk}});
    if (a != cplx(0.0)) {
      cplx ca = std::conj(a);
      den_acc = den_acc * FactoredPoly(-ca, {Root{1.0 / ca, 1, Region::Exterior}});
    }
  }
  return basis;
}

Eigen::MatrixXcd atto_compression_matrix(const AttoSpec& spec, const BlaschkeProduct& alpha,
                                         const OracleConfig& cfg) {
  cfg.validate();
  AttoSpec local = spec;
  local.alpha = alpha;
  AttoSymbolParts parts = build_symbol(local);
  auto e = model_space_basis(spec.theta);
  auto f = model_space_basis(alpha);
  auto grid = circle_grid(cfg.grid_N, 0.5);

  std::vector<cplx> phi(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) phi[k] = atto_phi_sum_form(local, parts, grid[k]);

  Eigen::MatrixXcd es(int(grid.size()), int(e.size())), fs(int(grid.size()), int(f.size()));
  for (std::size_t j = 0; j < e.size(); ++j)
    for (std::size_t k = 0; k < grid.size(); ++k) es(int(k), int(j)) = e[j].eval(grid[k]);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t k = 0; k < grid.size(); ++k) fs(int(k), int(i)) = f[i].eval(grid[k]);

  Eigen::MatrixXcd a(int(f.size()), int(e.size()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < grid.size(); ++k)
        acc += phi[k] * es(int(k), j) * std::conj(fs(int(k), i));
      a(i, j) = acc / double(grid.size());
    }
  return a;
}

AttoNumericKernel atto_numeric_kernel(const AttoSpec& spec, const BlaschkeProduct& alpha,
                                      const OracleConfig& cfg) {
  Eigen::MatrixXcd a = atto_compression_matrix(spec, alpha, cfg);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
  int cols = int(a.cols());
  int rank_cap = int(std::min(a.rows(), a.cols()));
  double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  int dim = cols - rank_cap;  // columns beyond the singular value count
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (smax == 0.0 || svd.singularValues()(i) < cfg.rank_tol * smax) ++dim;
  if (smax == 0.0) dim = cols;

  auto e = model_space_basis(spec.theta);
  auto grid = circle_grid(cfg.grid_N, 0.5);
  Eigen::MatrixXcd es(int(grid.size()), int(e.size()));
  for (std::size_t j = 0; j < e.size(); ++j)
    for (std::size_t k = 0; k < grid.size(); ++k) es(int(k), int(j)) = e[j].eval(grid[k]);

  AttoNumericKernel out;
  out.dim = dim;
  out.samples = es * svd.matrixV().rightCols(dim);
  return out;
}

AttoVerification verify_atto(const AttoSpec& spec, const KernelBasis& basis,
                             const OracleConfig& cfg) {
  AttoVerification v;
  AttoSymbolParts parts = build_symbol(spec);

  // two evaluations of the symbol
  auto grid = circle_grid(1024, 0.5);
  double scale = 0.0, gap = 0.0;
  for (cplx z : grid) {
    cplx s = atto_phi_sum_form(spec, parts, z);
    cplx p = atto_phi_product_form(spec, parts, z);
    scale = std::max(scale, std::abs(s));
    gap = std::max(gap, std::abs(s - p));
  }
  v.phi_form_agreement = scale > 0 ? gap / scale : gap;

  AttoNumericKernel ck = atto_numeric_kernel(spec, spec.alpha, cfg);
  v.numeric_dim = ck.dim;
  if (ck.dim > 0 && basis.span_dim > 0) {
    auto g = circle_grid(cfg.grid_N, 0.5);
    v.max_angle = max_principal_angle(basis_samples(basis, g), ck.samples);
  }
  v.ok = v.numeric_dim == basis.span_dim && v.max_angle <= 1e-6 && v.phi_form_agreement <= 1e-9;
  return v;
}

double alpha_independence_angle(const AttoSpec& spec, const BlaschkeProduct& second_alpha,
                                const KernelBasis& basis, const OracleConfig& cfg) {
  AttoSymbolParts parts = build_symbol(spec);
  if (second_alpha.degree() < parts.m)
    fail(ErrorCode::AlphaTooSmall, "second target model space is smaller than m");
  AttoNumericKernel ck = atto_numeric_kernel(spec, second_alpha, cfg);
  if (ck.dim != basis.span_dim)
    fail(ErrorCode::VerificationMismatch, "numeric kernel dimension changed with the target space");
  if (ck.dim == 0) return 0.0;
  auto g = circle_grid(cfg.grid_N, 0.5);
  return max_principal_angle(basis_samples(basis, g), ck.samples);
}

}  // namespace pk
