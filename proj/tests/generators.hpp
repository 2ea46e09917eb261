#pragma once

// Seeded random inputs shared by the unit and acceptance suites.

#include <utility>

#include "pk/kernels.hpp"
#include "pk/rng.hpp"

namespace pkt {

using namespace pk;

inline cplx random_root_in(Rng& rng, Region region) {
  switch (region) {
    case Region::Disk: return rng.disk(0.1, 0.85);
    case Region::Circle: return rng.unit();
    case Region::Exterior: return rng.disk(1.2, 3.0);
  }
  return 0.0;
}

// Random factored polynomial with roots drawn from all three regions;
// circle roots land exactly on the circle (factored input pins them).
inline FactoredPoly random_factored(Rng& rng, int degree, bool allow_circle = true) {
  std::vector<Root> roots;
  int guard = 0;
  while (int(roots.size()) < degree && guard++ < 1000) {
    double pick = rng.uniform();
    Region region = pick < 0.45               ? Region::Disk
                    : (pick < 0.7 && allow_circle) ? Region::Circle
                                                   : Region::Exterior;
    cplx z = random_root_in(rng, region);
    bool close = false;
    for (const auto& r : roots) close = close || std::abs(r.z - z) < 5e-2;
    if (close) continue;
    roots.push_back(Root{z, 1, region});
  }
  cplx leading = std::polar(rng.uniform(0.5, 2.0), rng.uniform(0.0, 6.28));
  return FactoredPoly(leading, std::move(roots));
}

inline bool well_separated(const FactoredPoly& p1, const FactoredPoly& p2, double gap = 1e-3) {
  for (const auto& r : p1.roots())
    if (p2.min_root_distance(r.z) < gap) return false;
  return true;
}

inline std::pair<FactoredPoly, FactoredPoly> random_coprime_pair(Rng& rng, int max_degree) {
  for (;;) {
    FactoredPoly p1 = random_factored(rng, rng.uniform_int(0, max_degree));
    FactoredPoly p2 = random_factored(rng, rng.uniform_int(1, max_degree));
    if (well_separated(p1, p2)) return {p1, p2};
  }
}

inline SymbolPair pair_of_polys(const FactoredPoly& p1, const FactoredPoly& p2) {
  return SymbolPair(BoundarySymbol::from_poly(p1), BoundarySymbol::from_poly(p2));
}

// Pair with a guaranteed nonzero projected kernel of dimension >= 1.
inline SymbolPair random_pair_with_kernel(Rng& rng, int max_degree, int* dim_out = nullptr) {
  for (;;) {
    auto [p1, p2] = random_coprime_pair(rng, max_degree);
    KernelBasis kb = kernel_plus(pair_of_polys(p1, p2));
    if (kb.span_dim >= 1) {
      if (dim_out) *dim_out = kb.span_dim;
      return pair_of_polys(p1, p2);
    }
  }
}

inline BlaschkeProduct random_blaschke(Rng& rng, int degree) {
  std::vector<BlaschkeProduct::Zero> zeros;
  for (int i = 0; i < degree; ++i) zeros.push_back({rng.disk(0.05, 0.8), 1});
  return BlaschkeProduct(std::move(zeros), rng.unit());
}

// Rational function analytic in the closed disk (poles exterior).
inline RationalFn random_analytic_rational(Rng& rng, int num_deg, int den_deg) {
  std::vector<Root> num, den;
  for (int i = 0; i < num_deg; ++i) {
    cplx z = rng.uniform() < 0.5 ? random_root_in(rng, Region::Exterior)
                                 : random_root_in(rng, Region::Circle);
    num.push_back(Root{z, 1, classify_point(z)});
  }
  for (int i = 0; i < den_deg; ++i) {
    cplx z = random_root_in(rng, Region::Exterior);
    den.push_back(Root{z, 1, Region::Exterior});
  }
  return RationalFn(FactoredPoly(std::polar(rng.uniform(0.5, 2.0), rng.uniform(0.0, 6.28)), num),
                    FactoredPoly(1.0, den));
}

// Rational function with poles in the disk, bounded at infinity.
inline RationalFn random_conj_analytic(Rng& rng, int deg) {
  std::vector<Root> num, den;
  for (int i = 0; i < deg; ++i) {
    den.push_back(Root{random_root_in(rng, Region::Disk), 1, Region::Disk});
    cplx z = rng.disk(0.1, 2.5);
    num.push_back(Root{z, 1, classify_point(z)});
  }
  RationalFn r(FactoredPoly(std::polar(rng.uniform(0.5, 2.0), rng.uniform(0.0, 6.28)), num),
               FactoredPoly(1.0, den));
  for (const auto& root : r.den().roots())
    if (r.num().has_root_near(root.z, 1e-2)) return random_conj_analytic(rng, deg);
  return r;
}

}  // namespace pkt
