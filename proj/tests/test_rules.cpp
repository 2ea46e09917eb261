#include <doctest.h>

#include "generators.hpp"
#include "pk/rules.hpp"

using namespace pk;

namespace {

bool same_span(const KernelBasis& x, const KernelBasis& y, double tol = 1e-7) {
  if (x.span_dim != y.span_dim) return false;
  for (int j = 0; j < x.span_dim; ++j) {
    if (!span_coordinates(y, x.element(j), tol)) return false;
    if (!span_coordinates(x, y.element(j), tol)) return false;
  }
  return true;
}

double grid_span_angle(const KernelBasis& x, const KernelBasis& y) {
  if (x.span_dim != y.span_dim) return M_PI / 2;
  if (x.span_dim == 0) return 0.0;
  auto grid = circle_grid(1024);
  return max_principal_angle(basis_samples(x, grid), basis_samples(y, grid));
}

}  // namespace

TEST_CASE("rewriting route agrees with the polynomial normal form") {
  Rng rng(101);
  int tested = 0;
  while (tested < 16) {
    auto [p1, p2] = pkt::random_coprime_pair(rng, 4);
    BlaschkeProduct alpha = pkt::random_blaschke(rng, rng.uniform_int(1, 3));
    bool conj = rng.uniform() < 0.5;
    bool on_b = rng.uniform() < 0.3;

    BoundarySymbol bl = BoundarySymbol::from_blaschke(alpha, conj);
    BoundarySymbol a = BoundarySymbol::from_poly(p1);
    BoundarySymbol b = BoundarySymbol::from_poly(p2);
    if (on_b)
      b = b * bl;
    else
      a = a * bl;

    SymbolPair pair(a, b);
    KernelBasis direct = kernel_plus(pair);  // carries the cross-check internally
    KernelBasis rules = kernel_plus_via_rules(pair);
    CHECK(rules.span_dim == direct.span_dim);
    CHECK(same_span(direct, rules));
    CHECK(grid_span_angle(direct, rules) <= 1e-9);
    ++tested;
  }
}

TEST_CASE("structured kernels follow the degree arithmetic") {
  Rng rng(103);
  for (int i = 0; i < 10; ++i) {
    auto [p1, p2] = pkt::random_coprime_pair(rng, 5);
    KernelBasis base = polynomial_pair_kernel(p1, p2);
    int deg = rng.uniform_int(1, 4);
    BlaschkeProduct alpha = pkt::random_blaschke(rng, deg);
    KernelBasis shifted = structured_blaschke_kernel(alpha, false, p1, p2);
    CHECK(shifted.span_dim == std::max(base.span_dim - deg, 0));
  }
}

TEST_CASE("circle zero shift") {
  SUBCASE("matches the direct kernel") {
    Rng rng(107);
    for (int i = 0; i < 8; ++i) {
      // p1 with at least one circle root, p2 without circle roots
      FactoredPoly p1 = pkt::random_factored(rng, rng.uniform_int(1, 3)) *
                        FactoredPoly(1.0, {Root{rng.unit(), 1, Region::Circle}});
      FactoredPoly p2 = pkt::random_factored(rng, rng.uniform_int(1, 4), false);
      if (!pkt::well_separated(p1, p2)) continue;
      auto [q1, q2] = circle_zero_shift(p1, p2);
      FactoredPoly q1c = q1, q2c = q2;
      cancel_common(q1c, q2c);
      KernelBasis lhs = polynomial_pair_kernel(p1, p2);
      KernelBasis rhs = polynomial_pair_kernel(q1c, q2c);
      CHECK(lhs.span_dim == rhs.span_dim);
      CHECK(same_span(lhs, rhs));
    }
  }
  SUBCASE("precondition: the quotient must stay bounded") {
    FactoredPoly p1 = FactoredPoly::linear(cplx(0, 1));
    FactoredPoly p2 = FactoredPoly::linear(-1.0) * FactoredPoly::z_power(1);
    CHECK_THROWS_AS((void)circle_zero_shift(p1, p2), Error);
  }
}

TEST_CASE("antianalytic multipliers with outer conjugates preserve kernels") {
  // h = (z-d)/z has an outer conjugate; with a bounded quotient the kernel
  // is unchanged when h multiplies the analytic symbol
  Rng rng(109);
  for (int i = 0; i < 8; ++i) {
    FactoredPoly p1 = pkt::random_factored(rng, rng.uniform_int(0, 2), false);
    FactoredPoly p2 = pkt::random_factored(rng, rng.uniform_int(1, 4), false);
    if (!pkt::well_separated(p1, p2)) continue;
    SymbolPair base = pkt::pair_of_polys(p1, p2);
    RationalFn h(FactoredPoly::linear(rng.disk(0.1, 0.8)), FactoredPoly::z_power(1));
    SymbolPair multiplied(base.a() * BoundarySymbol(h), base.b());
    CHECK(same_span(kernel_plus(base), kernel_plus(multiplied)));
  }
}

TEST_CASE("strictness of nonouter multipliers") {
  // h = conj(z): the kernel of (a conj(z), b) grows by exactly one dimension
  Rng rng(113);
  int d = 0;
  SymbolPair pair = pkt::random_pair_with_kernel(rng, 4, &d);
  SymbolPair grown(pair.a() * BoundarySymbol(RationalFn::z_power(-1)), pair.b());
  KernelBasis kg = kernel_plus(grown);
  CHECK(kg.span_dim == d + 1);
  // and every original member sits inside the grown kernel
  KernelBasis kb = kernel_plus(pair);
  for (int j = 0; j < kb.span_dim; ++j) CHECK(span_coordinates(kg, kb.element(j)));
}

TEST_CASE("invertible analytic multipliers shift the span by their value") {
  // h = z - e with e exterior: invertible in the analytic algebra;
  // ker+(a h, b) = h^{-1} ker+(a, b)
  Rng rng(127);
  int d = 0;
  SymbolPair pair = pkt::random_pair_with_kernel(rng, 4, &d);
  RationalFn h = RationalFn::from(FactoredPoly::linear(2.5));
  CHECK(invertible_analytic(h));
  SymbolPair multiplied(pair.a() * BoundarySymbol(h), pair.b());
  KernelBasis km = kernel_plus(multiplied);
  KernelBasis kb = kernel_plus(pair);
  CHECK(km.span_dim == d);
  for (int j = 0; j < d; ++j) CHECK(span_coordinates(kb, h * km.element(j)));
  // h with a disk zero shrinks the kernel strictly: h * ker+(a h, b) inside ker+
  RationalFn inner_h = RationalFn::from(FactoredPoly::linear(0.5));
  CHECK(!invertible_analytic(inner_h));
  KernelBasis shrunk = kernel_plus(SymbolPair(pair.a() * BoundarySymbol(inner_h), pair.b()));
  CHECK(shrunk.span_dim == d - 1);
  for (int j = 0; j < shrunk.span_dim; ++j)
    CHECK(span_coordinates(kb, inner_h * shrunk.element(j)));
}

TEST_CASE("invertible antianalytic multipliers leave the kernel alone") {
  Rng rng(131);
  int d = 0;
  SymbolPair pair = pkt::random_pair_with_kernel(rng, 4, &d);
  RationalFn h(FactoredPoly::linear(0.3), FactoredPoly::linear(cplx(0, 0.5)));
  CHECK(invertible_antianalytic(h));
  CHECK(same_span(kernel_plus(SymbolPair(pair.a() * BoundarySymbol(h), pair.b())),
                  kernel_plus(pair)));
  CHECK(same_span(kernel_plus(SymbolPair(pair.a(), pair.b() * BoundarySymbol(h))),
                  kernel_plus(pair)));
}

TEST_CASE("multiplier class predicates") {
  CHECK(invertible_analytic(RationalFn::from(FactoredPoly::linear(2.0))));
  CHECK(!invertible_analytic(RationalFn::from(FactoredPoly::linear(0.5))));
  CHECK(!invertible_analytic(RationalFn::from(FactoredPoly::linear(-1.0))));
  CHECK(invertible_antianalytic(RationalFn(FactoredPoly::linear(0.2), FactoredPoly::z_power(1))));
  CHECK(!invertible_antianalytic(RationalFn::from(FactoredPoly::linear(0.2))));  // grows at infinity
  CHECK(!invertible_antianalytic(RationalFn(FactoredPoly::linear(2.0), FactoredPoly::z_power(1))));
}
