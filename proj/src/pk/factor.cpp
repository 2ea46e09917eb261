#include "pk/factor.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <numeric>

#include "pk/error.hpp"
#include "pk/symbols.hpp"

namespace pk {

namespace {

std::vector<cplx> companion_eigenvalues(const ComplexPoly& p) {
  int n = p.degree();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  cplx lead = p.leading();
  for (int i = 0; i < n; ++i) {
    if (i + 1 < n) m(i + 1, i) = 1.0;
    m(i, n - 1) = -p[i] / lead;
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) fail(ErrorCode::IllConditioned, "eigenvalue solve failed");
  std::vector<cplx> r(n);
  for (int i = 0; i < n; ++i) r[i] = es.eigenvalues()(i);
  return r;
}

cplx newton_polish(const ComplexPoly& p, const ComplexPoly& dp, cplx z) {
  cplx f = p.eval(z), df = dp.eval(z);
  if (std::abs(df) < 1e-300) return z;
  cplx step = f / df;
  cplx cand = z - step;
  return std::abs(p.eval(cand)) <= std::abs(f) ? cand : z;
}

}  // namespace

FactoredPoly roots(const ComplexPoly& p, double tol) {
  if (p.is_zero()) fail(ErrorCode::Internal, "roots of the zero polynomial");
  if (tol <= 0.0 || tol >= 0.1) fail(ErrorCode::ParseError, "classification tolerance out of range");
  if (p.degree() == 0) return FactoredPoly::constant(p.leading());

  ComplexPoly dp = p.derivative();
  std::vector<cplx> rs = companion_eigenvalues(p);
  for (auto& z : rs) z = newton_polish(p, dp, z);
  std::sort(rs.begin(), rs.end(), cplx_less);

  // greedy clustering into multiplicities
  std::vector<Root> clustered;
  std::vector<bool> used(rs.size(), false);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (used[i]) continue;
    cplx sum = rs[i];
    int m = 1;
    used[i] = true;
    for (std::size_t j = i + 1; j < rs.size(); ++j) {
      if (used[j]) continue;
      if (std::abs(rs[j] - sum / double(m)) <= kRootMergeTol * std::max(1.0, std::abs(rs[i]))) {
        sum += rs[j];
        ++m;
        used[j] = true;
      }
    }
    cplx center = sum / double(m);
    clustered.push_back(Root{center, m, classify_point(center, tol)});
  }

  FactoredPoly f(p.leading(), std::move(clustered));
  ComplexPoly back = f.expand();
  ComplexPoly diff = back - p;
  double scale = p.max_abs_coeff();
  if (diff.max_abs_coeff() > 1e-6 * scale)
    fail(ErrorCode::IllConditioned,
         "polished roots fail to reproduce the polynomial (relative error " +
             fmt_double(diff.max_abs_coeff() / scale, "%.3g") + ")");
  return f;
}

InnerOuter inner_outer(const RationalFn& f) {
  if (f.is_zero()) fail(ErrorCode::NotInHardySpace, "the zero function has no inner-outer split");
  if (!f.in_hardy_plus())
    fail(ErrorCode::NotInHardySpace, "denominator has roots in the closed disk");

  std::vector<BlaschkeProduct::Zero> inner_zeros;
  FactoredPoly outer_num = FactoredPoly::constant(f.num().leading());
  for (const auto& r : f.num().roots()) {
    if (r.region == Region::Disk) {
      inner_zeros.push_back({r.z, r.mult});
      if (r.z != cplx(0.0)) {
        // replace (z-a) by its reflected outer companion (1 - conj(a) z)
        cplx a = std::conj(r.z);
        cplx lead = 1.0;
        for (int i = 0; i < r.mult; ++i) lead *= -a;
        outer_num = outer_num * FactoredPoly(lead, {Root{1.0 / a, r.mult, Region::Exterior}});
      }
    } else {
      outer_num = outer_num * FactoredPoly(1.0, {r});
    }
  }
  InnerOuter io{BlaschkeProduct(std::move(inner_zeros)), RationalFn(std::move(outer_num), f.den())};
  return io;
}

Jet jet_mul(const Jet& a, const Jet& b) {
  std::size_t n = a.size();
  Jet c(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n && j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

Jet jet_inv(const Jet& a) {
  if (a.empty() || a[0] == cplx(0.0)) fail(ErrorCode::Internal, "jet inversion at a zero");
  Jet r(a.size(), 0.0);
  r[0] = 1.0 / a[0];
  for (std::size_t k = 1; k < a.size(); ++k) {
    cplx s = 0.0;
    for (std::size_t j = 1; j <= k; ++j) s += (j < a.size() ? a[j] : cplx(0.0)) * r[k - j];
    r[k] = -s / a[0];
  }
  return r;
}

Jet jet_exp(const Jet& g) {
  Jet e(g.size(), 0.0);
  e[0] = std::exp(g[0]);
  for (std::size_t k = 1; k < g.size(); ++k) {
    cplx s = 0.0;
    for (std::size_t j = 1; j <= k; ++j) s += double(j) * g[j] * e[k - j];
    e[k] = s / double(k);
  }
  return e;
}

Jet jet_of_factored(const FactoredPoly& p, cplx t, int order) {
  Jet acc(std::size_t(order) + 1, 0.0);
  acc[0] = p.leading();
  for (const auto& r : p.roots()) {
    Jet lin(std::size_t(order) + 1, 0.0);
    lin[0] = t - r.z;
    if (order >= 1) lin[1] = 1.0;
    for (int i = 0; i < r.mult; ++i) acc = jet_mul(acc, lin);
  }
  return acc;
}

Jet jet_of_rational(const RationalFn& f, cplx t, int order) {
  Jet n = jet_of_factored(f.num(), t, order);
  Jet d = jet_of_factored(f.den(), t, order);
  return jet_mul(n, jet_inv(d));
}

ComplexPoly taylor_at(const BoundarySymbol& sym, cplx t, int order) {
  if (order < 0) fail(ErrorCode::ParseError, "taylor order must be nonnegative");
  if (sym.rational().den().min_root_distance(t) <= kPoleGuardTol)
    fail(ErrorCode::NotRegularPoint, "expansion point is a pole of the symbol");
  for (const auto& a : sym.atoms())
    if (std::abs(a.atom.point - t) <= kPoleGuardTol)
      fail(ErrorCode::NotRegularPoint, "expansion point coincides with a singular atom");

  Jet jet = jet_of_rational(sym.rational(), t, order);
  for (const auto& a : sym.atoms()) {
    // exponent of exp(e*mass*(z+p)/(z-p)) as a local jet, then its exponential
    Jet num(std::size_t(order) + 1, 0.0), den(std::size_t(order) + 1, 0.0);
    num[0] = t + a.atom.point;
    den[0] = t - a.atom.point;
    if (order >= 1) num[1] = den[1] = 1.0;
    Jet g = jet_mul(num, jet_inv(den));
    for (auto& c : g) c *= double(a.exponent) * a.atom.mass;
    jet = jet_mul(jet, jet_exp(g));
  }

  // expand sum jet_i (z-t)^i into the monomial basis
  ComplexPoly result;
  ComplexPoly shift({-t, 1.0});
  ComplexPoly power = ComplexPoly::constant(1.0);
  for (int i = 0; i <= order; ++i) {
    result = result + power * jet[std::size_t(i)];
    power = power * shift;
  }
  return result;
}

}  // namespace pk
