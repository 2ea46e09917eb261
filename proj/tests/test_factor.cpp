#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "generators.hpp"
#include "pk/factor.hpp"

using namespace pk;

TEST_CASE("roots of small polynomials with regions") {
  FactoredPoly f = roots(ComplexPoly({1.0, -2.5, 1.0}));
  REQUIRE(f.roots().size() == 2);
  CHECK(f.has_root_near(0.5, 1e-10));
  CHECK(f.has_root_near(2.0, 1e-10));
  CHECK(f.count(Region::Disk) == 1);
  CHECK(f.count(Region::Exterior) == 1);

  FactoredPoly g = roots(ComplexPoly({1.0, 2.0, 1.0}));  // (z+1)^2
  REQUIRE(g.roots().size() == 1);
  CHECK(g.roots()[0].mult == 2);
  CHECK(g.roots()[0].region == Region::Circle);
  CHECK(std::abs(g.roots()[0].z - cplx(-1.0)) < 1e-7);
}

TEST_CASE("degree-8 random roots agree with a direct eigenvalue solve") {
  Rng rng(11);
  for (int trial = 0; trial < 8; ++trial) {
    FactoredPoly ref = pkt::random_factored(rng, 8);
    ComplexPoly p = ref.expand();
    FactoredPoly found = roots(p);

    // independent route: raw companion eigenvalues, no polish, no clustering
    int n = p.degree();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      if (i + 1 < n) m(i + 1, i) = 1.0;
      m(i, n - 1) = -p[i] / p.leading();
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
    for (int i = 0; i < n; ++i) {
      cplx ev = es.eigenvalues()(i);
      CHECK(found.min_root_distance(ev) < 1e-7);
      // region from the modulus test with a tight tolerance
      Region expect = classify_point(ev, 1e-10);
      bool matched = false;
      for (const auto& r : found.roots())
        if (std::abs(r.z - ev) < 1e-7) matched = matched || r.region == expect;
      CHECK(matched);
    }
  }
}

TEST_CASE("ill-conditioned factorizations are reported") {
  // companion entries overflow, so the eigenvalues cannot reproduce p
  std::vector<cplx> c{1e200, 0.0, 1e-200};
  CHECK_THROWS_AS((void)roots(ComplexPoly(c), 1e-8), Error);
}

TEST_CASE("region split") {
  FactoredPoly p = FactoredPoly::z_power(3) * FactoredPoly::linear(-1.0) * FactoredPoly::linear(2.0);
  RegionSplit s = split_regions(p);
  CHECK(s.n_disk == 3);
  CHECK(s.n_circle == 1);
  CHECK(s.n_exterior == 1);
  CHECK(s.disk.degree() == 3);
  CHECK(s.circle.has_root_near(-1.0, 1e-14));
  CHECK(s.exterior.has_root_near(2.0, 1e-14));

  RegionSplit c = split_regions(FactoredPoly::constant(5.0));
  CHECK(c.n_disk == 0);
  CHECK(c.n_circle == 0);
  CHECK(c.n_exterior == 0);
  CHECK(c.disk.is_constant());
  CHECK(std::abs(c.leading - cplx(5.0)) < 1e-15);

  FactoredPoly q = FactoredPoly::linear(0.5) * FactoredPoly::linear(cplx(0, 1)) *
                   FactoredPoly::linear(3.0);
  RegionSplit sq = split_regions(q);
  CHECK(sq.n_disk == 1);
  CHECK(sq.n_circle == 1);
  CHECK(sq.n_exterior == 1);
}

TEST_CASE("blaschke split") {
  SUBCASE("pure z power") {
    BlaschkeSplit s = blaschke_split(BlaschkeProduct::z_power(2));
    CHECK(s.k == 2);
    CHECK(s.b_minus.is_constant());
    CHECK(s.b_plus.is_constant());
  }
  SUBCASE("single zero at 1/2") {
    BlaschkeProduct b({{0.5, 1}});
    BlaschkeSplit s = blaschke_split(b);
    CHECK(s.k == 1);
    for (cplx z : circle_grid(256)) {
      cplx prod = s.b_minus.eval(z) * z * s.b_plus.eval(z);
      CHECK(std::abs(prod - b.eval(z)) < 1e-10);
    }
    // b_plus = 1/(1 - z/2)
    CHECK(std::abs(s.b_plus.eval(0.0) - cplx(1.0)) < 1e-12);
    CHECK(std::abs(s.b_plus.eval(1.0) - cplx(2.0)) < 1e-12);
  }
  SUBCASE("origin zeros go to the z power") {
    BlaschkeProduct b({{0.0, 1}, {1.0 / 3.0, 1}});
    BlaschkeSplit s = blaschke_split(b);
    CHECK(s.k == 2);
    CHECK(s.b_minus.num().degree() == 1);  // only the 1/3 zero appears
    for (cplx z : circle_grid(128)) {
      CHECK(std::abs(s.b_minus.eval(z) * z * z * s.b_plus.eval(z) - b.eval(z)) < 1e-10);
    }
  }
  SUBCASE("split factors are bounded and bounded away from zero") {
    Rng rng(3);
    BlaschkeProduct b = pkt::random_blaschke(rng, 4);
    BlaschkeSplit s = blaschke_split(b);
    for (cplx z : circle_grid(128)) {
      CHECK(std::abs(s.b_minus.eval(z)) > 1e-3);
      CHECK(std::abs(s.b_minus.eval(z)) < 1e3);
      CHECK(std::abs(s.b_plus.eval(z)) > 1e-3);
      CHECK(std::abs(s.b_plus.eval(z)) < 1e3);
    }
  }
}

TEST_CASE("inner-outer factorization") {
  SUBCASE("boundary zeros stay outer") {
    InnerOuter io = inner_outer(RationalFn::from(FactoredPoly::linear(-1.0)));
    CHECK(io.inner.degree() == 0);
    CHECK(io.outer.num().has_root_near(-1.0, 1e-14));
  }
  SUBCASE("origin zero becomes the inner z") {
    InnerOuter io = inner_outer(RationalFn::from(FactoredPoly::z_power(1) * FactoredPoly::linear(-1.0)));
    CHECK(io.inner.degree() == 1);
    CHECK(io.inner.zeros()[0].z == cplx(0.0));
    CHECK(io.outer.num().has_root_near(-1.0, 1e-14));
  }
  SUBCASE("disk zero reflects") {
    RationalFn f = RationalFn::from(FactoredPoly::linear(0.5));
    InnerOuter io = inner_outer(f);
    CHECK(io.inner.degree() == 1);
    for (cplx z : circle_grid(128)) {
      CHECK(std::abs(std::abs(io.outer.eval(z)) - std::abs(f.eval(z))) < 1e-10);
      CHECK(std::abs(io.inner.eval(z) * io.outer.eval(z) - f.eval(z)) < 1e-10);
      CHECK(std::abs(std::abs(io.inner.eval(z)) - 1.0) < 1e-10);
    }
  }
  SUBCASE("outer factor has no disk zeros on random input") {
    Rng rng(5);
    for (int i = 0; i < 10; ++i) {
      RationalFn f = pkt::random_analytic_rational(rng, 4, 2);
      FactoredPoly extra = pkt::random_factored(rng, 2, false);
      RationalFn g = f * RationalFn::from(extra);
      if (!g.in_hardy_plus()) continue;
      InnerOuter io = inner_outer(g);
      CHECK(io.outer.num().count(Region::Disk) == 0);
      for (cplx z : circle_grid(64))
        CHECK(std::abs(io.inner.eval(z) * io.outer.eval(z) - g.eval(z)) <
              1e-9 * (1.0 + std::abs(g.eval(z))));
    }
  }
  SUBCASE("poles in the closed disk are rejected") {
    CHECK_THROWS_AS((void)inner_outer(RationalFn(FactoredPoly(), FactoredPoly::linear(0.5))), Error);
  }
}

namespace {

// directional derivatives along the tangent by high-order central stencils
cplx fd_derivative(const std::function<cplx(cplx)>& f, cplx t, int order, double h) {
  cplx u = cplx(0, 1) * t;  // unit tangent
  auto at = [&](double s) { return f(t + s * u); };
  cplx d;
  switch (order) {
    case 0: return at(0);
    case 1: d = (8.0 * (at(h) - at(-h)) - (at(2 * h) - at(-2 * h))) / (12.0 * h); break;
    case 2: d = (-(at(2 * h) + at(-2 * h)) + 16.0 * (at(h) + at(-h)) - 30.0 * at(0)) / (12.0 * h * h); break;
    default: throw std::runtime_error("unsupported order");
  }
  // remove the direction factor u^order
  cplx upow = 1.0;
  for (int i = 0; i < order; ++i) upow *= u;
  return d / upow;
}

// Cauchy-circle derivative oracle for higher orders
cplx cauchy_derivative(const std::function<cplx(cplx)>& f, cplx t, int order, double radius) {
  const int n = 128;
  cplx acc = 0.0;
  for (int k = 0; k < n; ++k) {
    double phi = 2.0 * M_PI * (k + 0.5) / n;
    cplx w = std::polar(radius, phi);
    acc += f(t + w) * std::polar(1.0, -order * phi);
  }
  double fact = 1.0;
  for (int i = 2; i <= order; ++i) fact *= i;
  return acc / double(n) / std::pow(radius, order) * fact;
}

}  // namespace

TEST_CASE("taylor expansions at boundary points") {
  SUBCASE("identity symbol") {
    BoundarySymbol id(RationalFn::z_power(1));
    ComplexPoly p = taylor_at(id, 1.0, 1);
    CHECK(std::abs(p[0]) < 1e-14);
    CHECK(std::abs(p[1] - cplx(1.0)) < 1e-14);
  }
  SUBCASE("conjugate of z at 1, order 0") {
    BoundarySymbol zbar(RationalFn::z_power(-1));
    ComplexPoly p = taylor_at(zbar, 1.0, 0);
    CHECK(std::abs(p[0] - cplx(1.0)) < 1e-14);
  }
  SUBCASE("conjugate Blaschke derivatives match independent oracles") {
    Rng rng(17);
    BlaschkeProduct b = pkt::random_blaschke(rng, 3);
    BoundarySymbol bbar(b.to_rational().conj_on_circle());
    auto eval = [&](cplx z) { return bbar.rational().eval(z); };
    for (cplx t : {cplx(1.0), std::polar(1.0, 2.1)}) {
      ComplexPoly p = taylor_at(bbar, t, 3);
      // jet coefficients: f^(k)(t)/k!
      cplx f1 = p.derivative().eval(t);
      cplx f2 = p.derivative().derivative().eval(t);
      cplx f3 = p.derivative().derivative().derivative().eval(t);
      CHECK(std::abs(p.eval(t) - eval(t)) < 1e-12);
      CHECK(std::abs(f1 - fd_derivative(eval, t, 1, 1e-5)) < 1e-6 * (1.0 + std::abs(f1)));
      CHECK(std::abs(f2 - fd_derivative(eval, t, 2, 1e-5)) < 1e-5 * (1.0 + std::abs(f2)));
      CHECK(std::abs(f3 - cauchy_derivative(eval, t, 3, 0.05)) < 1e-6 * (1.0 + std::abs(f3)));
    }
  }
  SUBCASE("atom jets match the Cauchy oracle") {
    SingularInnerAtom atom(-1.0, 1.0);
    BoundarySymbol sym = BoundarySymbol::from_atom(atom, -1) *
                         BoundarySymbol(RationalFn::from(FactoredPoly::linear(2.0)));
    cplx t = 1.0;
    auto eval = [&](cplx z) { return (z - 2.0) / atom.eval(z); };
    ComplexPoly p = taylor_at(sym, t, 2);
    cplx f1 = p.derivative().eval(t);
    cplx f2 = p.derivative().derivative().eval(t);
    CHECK(std::abs(p.eval(t) - eval(t)) < 1e-12);
    CHECK(std::abs(f1 - cauchy_derivative(eval, t, 1, 0.05)) < 1e-6 * (1.0 + std::abs(f1)));
    CHECK(std::abs(f2 - cauchy_derivative(eval, t, 2, 0.05)) < 1e-6 * (1.0 + std::abs(f2)));
  }
  SUBCASE("poles and atoms are not regular points") {
    BoundarySymbol pole(RationalFn(FactoredPoly(), FactoredPoly::linear(1.0)));
    CHECK_THROWS_AS((void)taylor_at(pole, 1.0, 1), Error);
    BoundarySymbol withatom = BoundarySymbol::from_atom(SingularInnerAtom(-1.0, 1.0), 1);
    CHECK_THROWS_AS((void)taylor_at(withatom, -1.0, 0), Error);
  }
}
