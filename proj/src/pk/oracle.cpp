#include "pk/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "pk/error.hpp"

namespace pk {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

const std::vector<cplx>& twiddles(int n) {
  thread_local std::map<int, std::vector<cplx>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<cplx> w(std::size_t(n) / 2);
  for (int i = 0; i < n / 2; ++i) w[std::size_t(i)] = std::polar(1.0, -kTau * i / n);
  return cache.emplace(n, std::move(w)).first->second;
}

}  // namespace

void OracleConfig::validate() const {
  if (!power_of_two(grid_N)) fail(ErrorCode::ParseError, "grid size must be a power of two");
  if (cutoff_M < 1 || buffer_K < 0) fail(ErrorCode::ParseError, "invalid cutoff/buffer");
  if (grid_N < 4 * (cutoff_M + buffer_K))
    fail(ErrorCode::ParseError, "grid size must be at least 4*(cutoff+buffer)");
  if (!(rank_tol > 0.0 && rank_tol < 1e-2) || !(residual_tol > 0.0 && residual_tol < 1e-2))
    fail(ErrorCode::ParseError, "tolerances must lie in (0, 1e-2)");
}

std::vector<cplx> circle_grid(int n, double offset) {
  std::vector<cplx> z(std::size_t(n), cplx(0.0));
  for (int k = 0; k < n; ++k) z[std::size_t(k)] = std::polar(1.0, kTau * (k + offset) / n);
  return z;
}

void fft_inplace(std::vector<cplx>& a, bool inverse) {
  int n = int(a.size());
  if (!power_of_two(n)) fail(ErrorCode::Internal, "fft size must be a power of two");
  for (int i = 1, j = 0; i < n; ++i) {
    int bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[std::size_t(i)], a[std::size_t(j)]);
  }
  const auto& w = twiddles(n);
  for (int len = 2; len <= n; len <<= 1) {
    int stride = n / len;
    for (int i = 0; i < n; i += len) {
      for (int j = 0; j < len / 2; ++j) {
        cplx tw = w[std::size_t(j * stride)];
        if (inverse) tw = std::conj(tw);
        cplx u = a[std::size_t(i + j)];
        cplx v = a[std::size_t(i + j + len / 2)] * tw;
        a[std::size_t(i + j)] = u + v;
        a[std::size_t(i + j + len / 2)] = u - v;
      }
    }
  }
  if (inverse)
    for (auto& x : a) x /= double(n);
}

int signed_freq(int bin, int n) { return bin < n / 2 ? bin : bin - n; }

std::vector<cplx> spectrum(const std::vector<cplx>& samples, double offset) {
  std::vector<cplx> c = samples;
  int n = int(c.size());
  fft_inplace(c, false);
  for (int b = 0; b < n; ++b) {
    c[std::size_t(b)] *= std::polar(1.0 / n, -kTau * signed_freq(b, n) * offset / n);
  }
  return c;
}

std::vector<cplx> samples_from_spectrum(const std::vector<cplx>& spec, double offset) {
  std::vector<cplx> c = spec;
  int n = int(c.size());
  for (int b = 0; b < n; ++b) {
    c[std::size_t(b)] *= std::polar(double(n), kTau * signed_freq(b, n) * offset / n);
  }
  fft_inplace(c, true);
  return c;
}

std::vector<cplx> project(const std::vector<cplx>& samples, char sign, double offset) {
  std::vector<cplx> c = spectrum(samples, offset);
  int n = int(c.size());
  for (int b = 0; b < n; ++b) {
    int m = signed_freq(b, n);
    if ((sign == '+' && m < 0) || (sign == '-' && m >= 0)) c[std::size_t(b)] = 0.0;
  }
  return samples_from_spectrum(c, offset);
}

std::vector<cplx> grid_values(const BoundarySymbol& sym, const std::vector<cplx>& grid) {
  std::vector<cplx> v(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    cplx z = grid[k];
    if (sym.rational().den().min_root_distance(z) <= kPoleGuardTol)
      fail(ErrorCode::PoleOnGrid, "grid point on a pole of the symbol");
    cplx acc = sym.rational().eval(z);
    for (const auto& a : sym.atoms()) {
      if (std::abs(z - a.atom.point) <= kPoleGuardTol)
        fail(ErrorCode::PoleOnGrid, "grid point on a singular atom");
      cplx val = a.atom.eval(z);
      acc *= a.exponent == 1 ? val : 1.0 / val;
    }
    v[k] = acc;
  }
  return v;
}

std::vector<cplx> apply_paired(const SymbolPair& pair, const std::vector<cplx>& f_samples,
                               const OracleConfig& cfg, double offset) {
  cfg.validate();
  auto grid = circle_grid(int(f_samples.size()), offset);
  auto av = grid_values(pair.a(), grid);
  auto bv = grid_values(pair.b(), grid);
  auto fp = project(f_samples, '+', offset);
  auto fm = project(f_samples, '-', offset);
  std::vector<cplx> out(f_samples.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = av[k] * fp[k] + bv[k] * fm[k];
  return out;
}

namespace {

// Exclusion mask for norms of atom-bearing samples; the excluded arc mass is
// of the order of the exclusion radius.
std::vector<bool> atom_mask(const SymbolPair* pair, const SymbolSum* phi,
                            const std::vector<cplx>& grid) {
  std::vector<cplx> pts;
  auto collect = [&pts](const BoundarySymbol& s) {
    for (const auto& a : s.atoms()) pts.push_back(a.atom.point);
  };
  if (pair) {
    collect(pair->a());
    collect(pair->b());
  }
  if (phi)
    for (const auto& t : *phi) collect(t);
  std::vector<bool> keep(grid.size(), true);
  for (std::size_t k = 0; k < grid.size(); ++k)
    for (cplx p : pts)
      if (std::abs(grid[k] - p) < 1e-6) keep[k] = false;
  return keep;
}

double masked_norm(const std::vector<cplx>& v, const std::vector<bool>& keep) {
  double s = 0.0;
  std::size_t n = 0;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (keep[k]) {
      s += std::norm(v[k]);
      ++n;
    }
  return n ? std::sqrt(s / double(n)) : 0.0;
}

double positive_part_norm(const std::vector<cplx>& samples, double offset) {
  auto c = spectrum(samples, offset);
  int n = int(c.size());
  double s = 0.0;
  for (int b = 0; b < n; ++b)
    if (signed_freq(b, n) >= 0) s += std::norm(c[std::size_t(b)]);
  return std::sqrt(s);
}

}  // namespace

double toeplitz_residual(const SymbolPair& pair, const CircleFn& phi, const OracleConfig& cfg) {
  cfg.validate();
  Error last(ErrorCode::PoleOnGrid, "unreachable");
  for (double offset : {0.5, 1.0}) {
    try {
      auto grid = circle_grid(cfg.grid_N, offset);
      auto av = grid_values(pair.a(), grid);
      auto bv = grid_values(pair.b(), grid);
      double bmax = 0.0, bmin = std::numeric_limits<double>::infinity();
      for (auto& x : bv) {
        bmax = std::max(bmax, std::abs(x));
        bmin = std::min(bmin, std::abs(x));
      }
      if (bmin <= 1e-10 * bmax) fail(ErrorCode::PoleOnGrid, "b vanishes on a grid point");
      std::vector<cplx> h(grid.size()), f(grid.size());
      for (std::size_t k = 0; k < grid.size(); ++k) {
        f[k] = phi(grid[k]);
        h[k] = av[k] / bv[k] * f[k];
      }
      auto keep = atom_mask(&pair, nullptr, grid);
      double denom = masked_norm(f, keep);
      if (denom == 0.0) fail(ErrorCode::Internal, "zero test function");
      return positive_part_norm(h, offset) / denom;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PoleOnGrid) throw;
      last = e;
    }
  }
  throw last;
}

std::vector<cplx> atom_coefficients(const SingularInnerAtom& atom, int count) {
  // exp(mass (z+t)/(z-t)) = S(z/t) with S(w) = exp(-mass (1+w)/(1-w));
  // S expands through Laguerre polynomials: S = e^{-mass} sum (L_n - L_{n-1}) w^n.
  std::vector<cplx> out(std::size_t(count), cplx(0.0));
  double x = 2.0 * atom.mass;
  double lm1 = 0.0, l0 = 1.0;  // L_{-1}, L_0
  double scale = std::exp(-atom.mass);
  cplx tpow = 1.0;  // t^{-n}
  cplx tinv = 1.0 / atom.point;
  for (int n = 0; n < count; ++n) {
    out[std::size_t(n)] = scale * (l0 - lm1) * tpow;
    double l1 = ((2.0 * n + 1.0 - x) * l0 - n * lm1) / (n + 1.0);
    lm1 = l0;
    l0 = l1;
    tpow *= tinv;
  }
  return out;
}

CoeffWindow symbol_sum_coefficients(const SymbolSum& terms, const OracleConfig& cfg) {
  cfg.validate();
  const int n = cfg.grid_N;
  const int half = n / 2;
  const int series_len = 2 * n;  // atom series truncation
  CoeffWindow win;
  win.lo = -half - series_len;
  win.c.assign(std::size_t(2 * (half + series_len)) + 1, 0.0);
  auto grid = circle_grid(n, 0.5);

  for (const auto& term : terms) {
    if (term.is_zero()) continue;
    if (term.atoms().size() > 1)
      fail(ErrorCode::UnsupportedSymbol,
           "coefficient series supports at most one singular atom per term");
    auto rs = grid_values(BoundarySymbol(term.rational()), grid);
    auto rc = spectrum(rs, 0.5);
    double rmax = 0.0;
    for (auto& x : rc) rmax = std::max(rmax, std::abs(x));
    if (term.atoms().empty()) {
      for (int b = 0; b < n; ++b) {
        int m = signed_freq(b, n);
        win.c[std::size_t(m - win.lo)] += rc[std::size_t(b)];
      }
      continue;
    }
    const auto& ap = term.atoms()[0];
    auto series = atom_coefficients(ap.atom, series_len);
    // conj on the circle reflects the series: coefficient conj(s_j) at -j
    for (int b = 0; b < n; ++b) {
      cplx r = rc[std::size_t(b)];
      if (std::abs(r) <= 1e-17 * rmax) continue;
      int k = signed_freq(b, n);
      for (int j = 0; j < series_len; ++j) {
        cplx s = series[std::size_t(j)];
        int m = ap.exponent == 1 ? k + j : k - j;
        if (ap.exponent != 1) s = std::conj(s);
        win.c[std::size_t(m - win.lo)] += r * s;
      }
    }
  }
  return win;
}

double toeplitz_residual(const SymbolPair& pair, const SymbolSum& phi, const OracleConfig& cfg) {
  cfg.validate();
  bool atoms = !pair.a().is_rational() || !pair.b().is_rational();
  for (const auto& t : phi) atoms = atoms || !t.is_rational();
  if (!atoms) {
    SymbolSum copy = phi;
    return toeplitz_residual(
        pair,
        [&copy](cplx z) {
          cplx s = 0.0;
          for (const auto& t : copy) s += t.eval(z);
          return s;
        },
        cfg);
  }
  BoundarySymbol ratio = pair.a() / pair.b();
  SymbolSum h;
  for (const auto& t : phi) h.push_back(ratio * t);
  CoeffWindow ch = symbol_sum_coefficients(h, cfg);
  CoeffWindow cf = symbol_sum_coefficients(phi, cfg);
  double num = 0.0, den = 0.0;
  for (int m = ch.lo; m < ch.lo + int(ch.c.size()); ++m)
    if (m >= 0) num += std::norm(ch.at(m));
  for (const auto& x : cf.c) den += std::norm(x);
  if (den == 0.0) fail(ErrorCode::Internal, "zero test function");
  return std::sqrt(num) / std::sqrt(den);
}

NumericKernel numeric_kernel(const SymbolPair& pair, const OracleConfig& cfg,
                             const RationalFn* trial_factor) {
  cfg.validate();
  Error last(ErrorCode::PoleOnGrid, "unreachable");
  for (double offset : {0.5, 1.0}) {
    try {
      auto grid = circle_grid(cfg.grid_N, offset);
      auto av = grid_values(pair.a(), grid);
      auto bv = grid_values(pair.b(), grid);
      double bmax = 0.0, bmin = std::numeric_limits<double>::infinity();
      for (auto& x : bv) {
        bmax = std::max(bmax, std::abs(x));
        bmin = std::min(bmin, std::abs(x));
      }
      if (bmin <= 1e-10 * bmax) fail(ErrorCode::PoleOnGrid, "b vanishes on a grid point");

      std::vector<cplx> f0(grid.size(), 1.0);
      if (trial_factor) f0 = grid_values(BoundarySymbol(*trial_factor), grid);

      const int cols = cfg.cutoff_M + 1;
      const int rows = cfg.cutoff_M + cfg.buffer_K + 1;
      Eigen::MatrixXcd a(rows, cols);
      std::vector<cplx> cur(grid.size());
      for (std::size_t k = 0; k < grid.size(); ++k) cur[k] = av[k] / bv[k] * f0[k];
      for (int j = 0; j < cols; ++j) {
        auto c = spectrum(cur, offset);
        for (int r = 0; r < rows; ++r) a(r, j) = c[std::size_t(r)];
        if (j + 1 < cols)
          for (std::size_t k = 0; k < grid.size(); ++k) cur[k] *= grid[k];
      }

      Eigen::BDCSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinV);
      double smax = svd.singularValues()(0);
      if (!std::isfinite(smax)) fail(ErrorCode::IllConditioned, "singular values overflow");
      NumericKernel out;
      out.offset = offset;
      out.singular_values.assign(svd.singularValues().data(),
                                 svd.singularValues().data() + svd.singularValues().size());
      int dim = 0;
      for (double s : out.singular_values)
        if (smax == 0.0 || s < cfg.rank_tol * smax) ++dim;
      out.dim = dim;
      out.basis_samples.resize(int(grid.size()), dim);
      for (int i = 0; i < dim; ++i) {
        Eigen::VectorXcd v = svd.matrixV().col(cols - dim + i);
        std::vector<cplx> acc(grid.size(), 0.0);
        std::vector<cplx> zp(grid.size(), 1.0);
        for (int j = 0; j < cols; ++j) {
          for (std::size_t k = 0; k < grid.size(); ++k) acc[k] += v(j) * f0[k] * zp[k];
          if (j + 1 < cols)
            for (std::size_t k = 0; k < grid.size(); ++k) zp[k] *= grid[k];
        }
        for (std::size_t k = 0; k < grid.size(); ++k) out.basis_samples(int(k), i) = acc[k];
      }
      return out;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PoleOnGrid) throw;
      last = e;
    }
  }
  throw last;
}

std::vector<double> principal_angles(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.cols() == 0 || b.cols() == 0) return {};
  auto orthobasis = [](const Eigen::MatrixXcd& m) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(m);
    qr.setThreshold(1e-10);
    if (qr.rank() < m.cols())
      fail(ErrorCode::RankDeficientInput, "principal angles need linearly independent columns");
    Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(m.rows(), m.cols());
    return q;
  };
  Eigen::MatrixXcd qa = orthobasis(a), qb = orthobasis(b);
  Eigen::MatrixXcd cross = qa.adjoint() * qb;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(cross);
  // sine-based values resolve the small angles the cosine form flattens
  Eigen::JacobiSVD<Eigen::MatrixXcd> sine_svd(qb - qa * cross);
  std::vector<double> cosines, sines;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    cosines.push_back(std::min(1.0, svd.singularValues()(i)));
  for (int i = 0; i < sine_svd.singularValues().size(); ++i)
    sines.push_back(std::min(1.0, sine_svd.singularValues()(i)));
  std::sort(cosines.rbegin(), cosines.rend());
  std::sort(sines.begin(), sines.end());
  std::vector<double> angles;
  for (std::size_t i = 0; i < cosines.size(); ++i) {
    if (cosines[i] > 0.7 && i < sines.size())
      angles.push_back(std::asin(sines[i]));
    else
      angles.push_back(std::acos(std::max(-1.0, cosines[i])));
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

double max_principal_angle(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  auto ang = principal_angles(a, b);
  return ang.empty() ? 0.0 : ang.back();
}

}  // namespace pk
