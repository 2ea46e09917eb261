#include <doctest.h>

#include "generators.hpp"
#include "pk/factor.hpp"

using namespace pk;

TEST_CASE("complex polynomial arithmetic") {
  ComplexPoly p({1.0, 2.0, 1.0});  // 1 + 2z + z^2
  ComplexPoly q({-1.0, 1.0});      // z - 1
  CHECK((p * q).degree() == 3);
  CHECK(std::abs((p * q).eval(2.0) - p.eval(2.0) * q.eval(2.0)) < 1e-14);
  CHECK((p - p).is_zero());
  CHECK(p.derivative().coeffs() == std::vector<cplx>{2.0, 2.0});
  CHECK(ComplexPoly::z_power(3).eval(cplx(0, 1)) == cplx(0, -1));
}

TEST_CASE("factored expansion matches hand result") {
  FactoredPoly f(1.0, {Root{0.5, 1, Region::Disk}, Root{2.0, 1, Region::Exterior}});
  ComplexPoly p = f.expand();
  CHECK(std::abs(p[0] - cplx(1.0)) < 1e-15);
  CHECK(std::abs(p[1] - cplx(-2.5)) < 1e-15);
  CHECK(std::abs(p[2] - cplx(1.0)) < 1e-15);
}

TEST_CASE("expansion/refactorization round-trips for degrees <= 16") {
  Rng rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    int deg = rng.uniform_int(1, 16);
    FactoredPoly f = pkt::random_factored(rng, deg);
    ComplexPoly p = f.expand();
    ComplexPoly back = roots(p).expand();
    double scale = p.max_abs_coeff();
    CHECK((back - p).max_abs_coeff() <= 1e-10 * scale);
  }
}

TEST_CASE("common roots cancel within tolerance") {
  FactoredPoly sh = FactoredPoly::linear(0.5);
  FactoredPoly a = sh * FactoredPoly::linear(2.0);
  FactoredPoly b = FactoredPoly::linear(0.5 + 1e-9) * FactoredPoly::linear(-3.0);
  FactoredPoly common = cancel_common(a, b);
  CHECK(common.degree() == 1);
  CHECK(a.degree() == 1);
  CHECK(b.degree() == 1);
  CHECK(a.has_root_near(2.0, 1e-12));
  CHECK(b.has_root_near(-3.0, 1e-12));
}

TEST_CASE("boundary conjugate of a factored polynomial") {
  // conj(p(z)) = refl(z) z^-deg on the circle
  FactoredPoly p(2.0, {Root{-1.0, 1, Region::Circle}, Root{0.4, 1, Region::Disk}});
  FactoredPoly refl = p.conj_reflected();
  for (cplx z : circle_grid(32)) {
    cplx lhs = std::conj(p.eval(z));
    cplx rhs = refl.eval(z) / std::pow(z, 2);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("zero polynomial conventions") {
  CHECK(FactoredPoly::zero().degree() == -1);
  CHECK(ComplexPoly().is_zero());
  CHECK(FactoredPoly::z_power(0).degree() == 0);
}
