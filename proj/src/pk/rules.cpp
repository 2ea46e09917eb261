#include "pk/rules.hpp"

#include <sstream>

#include "pk/error.hpp"

namespace pk {

namespace {

struct PendingShift {
  int zpow_p1 = 0;
  int zpow_p2 = 0;
  RationalFn multiplier = RationalFn::one();
  std::vector<TraceEntry> trace;
};

void consume_hint(const BlaschkeHint& hint, bool on_a, PendingShift& acc) {
  BlaschkeSplit split = blaschke_split(hint.factor);
  std::ostringstream msg;
  if (on_a && !hint.conjugated) {
    acc.zpow_p1 += split.k;
    acc.multiplier = acc.multiplier * split.b_plus.inverse();
    msg << "strip Blaschke factor (degree " << split.k
        << ") from a: multiply basis by the inverse analytic part";
    acc.trace.push_back({msg.str(), "analytic-blaschke-multiplier"});
  } else if (on_a && hint.conjugated) {
    acc.zpow_p2 += split.k;
    acc.multiplier = acc.multiplier * split.b_minus.conj_on_circle().inverse();
    msg << "strip conjugate Blaschke factor (degree " << split.k
        << ") from a: multiply basis by the inverse conjugated antianalytic part";
    acc.trace.push_back({msg.str(), "antianalytic-blaschke-multiplier"});
  } else if (!on_a && !hint.conjugated) {
    acc.zpow_p2 += split.k;
    acc.multiplier = acc.multiplier * split.b_plus;
    msg << "strip Blaschke factor (degree " << split.k
        << ") from b: multiply basis by the analytic part";
    acc.trace.push_back({msg.str(), "analytic-blaschke-multiplier"});
  } else {
    acc.zpow_p1 += split.k;
    acc.multiplier = acc.multiplier * split.b_minus.conj_on_circle();
    msg << "strip conjugate Blaschke factor (degree " << split.k
        << ") from b: multiply basis by the conjugated antianalytic part";
    acc.trace.push_back({msg.str(), "antianalytic-blaschke-multiplier"});
  }
}

}  // namespace

KernelBasis kernel_plus_via_rules(const SymbolPair& pair) {
  if (!pair.is_rational())
    fail(ErrorCode::UnsupportedSymbol, "rewriting route requires rational symbols");

  RationalFn av = pair.a().rational();
  RationalFn bv = pair.b().rational();
  PendingShift acc;
  for (const auto& h : pair.a().blaschke_hints()) {
    av = av / (h.conjugated ? h.factor.to_rational().conj_on_circle() : h.factor.to_rational());
    consume_hint(h, /*on_a=*/true, acc);
  }
  for (const auto& h : pair.b().blaschke_hints()) {
    bv = bv / (h.conjugated ? h.factor.to_rational().conj_on_circle() : h.factor.to_rational());
    consume_hint(h, /*on_a=*/false, acc);
  }

  FactoredPoly p1 = av.num() * bv.den() * FactoredPoly::z_power(acc.zpow_p1);
  FactoredPoly p2 = bv.num() * av.den() * FactoredPoly::z_power(acc.zpow_p2);
  cancel_common(p1, p2);
  cplx l1 = p1.leading();
  p1 = p1.scaled(1.0 / l1);
  p2 = p2.scaled(1.0 / l1);

  KernelBasis base = polynomial_pair_kernel(p1, p2);
  KernelBasis out;
  out.span_dim = base.span_dim;
  out.factor = base.span_dim > 0 ? acc.multiplier * base.factor : RationalFn::one();
  out.trace = acc.trace;
  out.trace.insert(out.trace.end(), base.trace.begin(), base.trace.end());
  return out;
}

KernelBasis structured_blaschke_kernel(const BlaschkeProduct& alpha, bool conjugated,
                                       const FactoredPoly& p1, const FactoredPoly& p2) {
  BoundarySymbol a = BoundarySymbol::from_blaschke(alpha, conjugated) * BoundarySymbol::from_poly(p1);
  SymbolPair pair(a, BoundarySymbol::from_poly(p2));
  return kernel_plus_via_rules(pair);
}

std::pair<FactoredPoly, FactoredPoly> circle_zero_shift(const FactoredPoly& p1,
                                                        const FactoredPoly& p2) {
  if (p2.count(Region::Circle) > 0)
    fail(ErrorCode::UnsupportedSymbol,
         "circle-zero shift needs a bounded quotient: p2 must have no circle zeros");
  std::vector<Root> keep;
  int shifted = 0;
  for (const auto& r : p1.roots()) {
    if (r.region == Region::Circle)
      shifted += r.mult;
    else
      keep.push_back(r);
  }
  FactoredPoly q1 = FactoredPoly(p1.leading(), std::move(keep)) * FactoredPoly::z_power(shifted);
  return {q1, p2};
}

bool invertible_analytic(const RationalFn& h) {
  if (h.is_zero()) return false;
  return h.num().count(Region::Disk) == 0 && h.num().count(Region::Circle) == 0 &&
         h.den().count(Region::Disk) == 0 && h.den().count(Region::Circle) == 0;
}

bool invertible_antianalytic(const RationalFn& h) {
  if (h.is_zero()) return false;
  return h.num().count(Region::Exterior) == 0 && h.num().count(Region::Circle) == 0 &&
         h.den().count(Region::Exterior) == 0 && h.den().count(Region::Circle) == 0 &&
         h.num().degree() == h.den().degree();
}

}  // namespace pk
