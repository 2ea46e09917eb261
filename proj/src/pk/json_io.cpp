#include "pk/json_io.hpp"

#include <sstream>

#include "pk/error.hpp"
#include "pk/factor.hpp"

namespace pk {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  fail(ErrorCode::ParseError, path + ": " + what);
}

cplx parse_cplx(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    bad(path, "expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

int parse_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  return j.get<int>();
}

FactoredPoly parse_factored(const json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  cplx leading = j.contains("leading") ? parse_cplx(j["leading"], path + ".leading") : cplx(1.0);
  std::vector<Root> roots;
  if (j.contains("roots")) {
    if (!j["roots"].is_array()) bad(path + ".roots", "expected an array");
    int idx = 0;
    for (const auto& r : j["roots"]) {
      std::string rp = path + ".roots[" + std::to_string(idx++) + "]";
      if (!r.is_object() || !r.contains("z")) bad(rp, "expected {\"z\": [re,im], ...}");
      cplx z = parse_cplx(r["z"], rp + ".z");
      int mult = r.contains("mult") ? parse_int(r["mult"], rp + ".mult") : 1;
      if (mult < 1) bad(rp + ".mult", "multiplicity must be positive");
      Region region = classify_point(z);
      if (r.contains("region")) {
        std::string s = r["region"].get<std::string>();
        if (s == "D")
          region = Region::Disk;
        else if (s == "T")
          region = Region::Circle;
        else if (s == "E")
          region = Region::Exterior;
        else
          bad(rp + ".region", "expected one of D, T, E");
      }
      roots.push_back(Root{z, mult, region});
    }
  }
  return FactoredPoly(leading, std::move(roots));
}

FactoredPoly parse_poly(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    bad(path, "expected {\"coeffs\": [[re,im],...]}");
  std::vector<cplx> coeffs;
  int idx = 0;
  for (const auto& c : j["coeffs"])
    coeffs.push_back(parse_cplx(c, path + ".coeffs[" + std::to_string(idx++) + "]"));
  if (coeffs.empty()) bad(path + ".coeffs", "must not be empty");
  ComplexPoly p(std::move(coeffs));
  if (p.is_zero()) bad(path, "the zero polynomial is not a valid symbol");
  if (p.degree() == 0) return FactoredPoly::constant(p.leading());
  return roots(p);
}

BlaschkeProduct parse_blaschke(const json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  cplx constant = j.contains("constant") ? parse_cplx(j["constant"], path + ".constant") : cplx(1.0);
  std::vector<BlaschkeProduct::Zero> zeros;
  if (j.contains("zeros")) {
    if (!j["zeros"].is_array()) bad(path + ".zeros", "expected an array");
    int idx = 0;
    for (const auto& r : j["zeros"]) {
      std::string rp = path + ".zeros[" + std::to_string(idx++) + "]";
      if (!r.is_object() || !r.contains("z")) bad(rp, "expected {\"z\": [re,im], ...}");
      cplx z = parse_cplx(r["z"], rp + ".z");
      int mult = r.contains("mult") ? parse_int(r["mult"], rp + ".mult") : 1;
      zeros.push_back({z, mult});
    }
  }
  try {
    return BlaschkeProduct(std::move(zeros), constant);
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

}  // namespace

BoundarySymbol parse_symbol(const json& j, const std::string& path) {
  if (!j.is_object() || j.size() != 1)
    bad(path, "expected exactly one of poly/factored/blaschke/rational/atom/product/conj");
  if (j.contains("poly")) return BoundarySymbol::from_poly(parse_poly(j["poly"], path + ".poly"));
  if (j.contains("factored"))
    return BoundarySymbol::from_poly(parse_factored(j["factored"], path + ".factored"));
  if (j.contains("blaschke"))
    return BoundarySymbol::from_blaschke(parse_blaschke(j["blaschke"], path + ".blaschke"));
  if (j.contains("rational")) {
    const json& r = j["rational"];
    if (!r.is_object() || !r.contains("num") || !r.contains("den"))
      bad(path + ".rational", "expected {\"num\": sym, \"den\": sym}");
    return parse_symbol(r["num"], path + ".rational.num") /
           parse_symbol(r["den"], path + ".rational.den");
  }
  if (j.contains("atom")) {
    const json& a = j["atom"];
    if (!a.is_object() || !a.contains("point") || !a.contains("mass"))
      bad(path + ".atom", "expected {\"point\": [re,im], \"mass\": m, \"exp\": +-1}");
    cplx point = parse_cplx(a["point"], path + ".atom.point");
    if (!a["mass"].is_number()) bad(path + ".atom.mass", "expected a number");
    double mass = a["mass"].get<double>();
    int exp = a.contains("exp") ? parse_int(a["exp"], path + ".atom.exp") : 1;
    try {
      return BoundarySymbol::from_atom(SingularInnerAtom(point, mass), exp);
    } catch (const Error& e) {
      bad(path + ".atom", e.what());
    }
  }
  if (j.contains("product")) {
    if (!j["product"].is_array() || j["product"].empty())
      bad(path + ".product", "expected a nonempty array of symbols");
    BoundarySymbol acc;
    int idx = 0;
    for (const auto& f : j["product"])
      acc = acc * parse_symbol(f, path + ".product[" + std::to_string(idx++) + "]");
    return acc;
  }
  if (j.contains("conj")) return parse_symbol(j["conj"], path + ".conj").conj_on_circle();
  bad(path, "unknown symbol form " + j.begin().key());
}

SymbolPair parse_pair(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b"))
    bad(path, "expected {\"a\": sym, \"b\": sym}");
  return SymbolPair(parse_symbol(j["a"], path + ".a"), parse_symbol(j["b"], path + ".b"));
}

AttoSpec parse_atto_spec(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("theta") || !j.contains("alpha"))
    bad(path, "expected {\"theta\":..., \"alpha\":..., \"r_plus\":..., \"r_minus\":..., \"points\":...}");
  AttoSpec spec;
  spec.theta = parse_blaschke(j["theta"], path + ".theta");
  spec.alpha = parse_blaschke(j["alpha"], path + ".alpha");
  auto parse_tail = [&](const char* key) -> RationalFn {
    if (!j.contains(key) || j[key].is_null()) return RationalFn::zero();
    BoundarySymbol s = parse_symbol(j[key], path + "." + key);
    if (!s.is_rational()) bad(path + "." + key, "tail must be rational");
    return s.rational();
  };
  spec.r_plus = parse_tail("r_plus");
  spec.r_minus = parse_tail("r_minus");
  if (j.contains("points")) {
    if (!j["points"].is_array()) bad(path + ".points", "expected an array");
    int idx = 0;
    for (const auto& p : j["points"]) {
      std::string pp = path + ".points[" + std::to_string(idx++) + "]";
      if (!p.is_object() || !p.contains("t")) bad(pp, "expected {\"t\": [re,im], \"order\": n}");
      BoundaryPoint bp;
      bp.t = parse_cplx(p["t"], pp + ".t");
      bp.order = p.contains("order") ? parse_int(p["order"], pp + ".order") : 1;
      spec.points.push_back(bp);
    }
  }
  return spec;
}

json parse_text(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) fail(ErrorCode::ParseError, what + ": invalid JSON");
  return j;
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  if (text.empty()) return cfg;
  json j = parse_text(text, "config");
  if (!j.is_object()) fail(ErrorCode::ParseError, "config: expected an object");
  if (j.contains("grid")) cfg.oracle.grid_N = parse_int(j["grid"], "config.grid");
  if (j.contains("cutoff")) cfg.oracle.cutoff_M = parse_int(j["cutoff"], "config.cutoff");
  if (j.contains("buffer")) cfg.oracle.buffer_K = parse_int(j["buffer"], "config.buffer");
  if (j.contains("rank_tol")) cfg.oracle.rank_tol = j["rank_tol"].get<double>();
  if (j.contains("residual_tol")) cfg.oracle.residual_tol = j["residual_tol"].get<double>();
  if (j.contains("alpha_check")) cfg.alpha_check = j["alpha_check"].get<bool>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  cfg.oracle.validate();
  return cfg;
}

json factored_to_json(const FactoredPoly& p) {
  // +0.0 normalizes negative zeros out of the serialized form
  json roots = json::array();
  for (const auto& r : p.roots()) {
    roots.push_back(json{{"z", {r.z.real() + 0.0, r.z.imag() + 0.0}},
                         {"mult", r.mult},
                         {"region", std::string(1, region_code(r.region))}});
  }
  return json{{"leading", {p.leading().real() + 0.0, p.leading().imag() + 0.0}}, {"roots", roots}};
}

json rational_to_json(const RationalFn& r) {
  return json{{"num", factored_to_json(r.num())}, {"den", factored_to_json(r.den())}};
}

json trace_to_json(const std::vector<TraceEntry>& trace) {
  json out = json::array();
  for (const auto& t : trace) out.push_back(json{{"rule", t.rule}, {"paper_ref", t.ref}});
  return out;
}

namespace {

void dump_value(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += json(it.key()).dump();
        out += ':';
        dump_value(it.value(), out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        dump_value(v, out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float:
      out += fmt_double(j.get<double>());
      break;
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump_report(const json& j) {
  std::string out;
  dump_value(j, out);
  out += '\n';
  return out;
}

namespace {

json kernel_body(const KernelBasis& basis) {
  json j;
  j["dim"] = basis.span_dim;
  j["span_degree"] = basis.span_dim - 1;
  j["factor"] = basis.empty() ? json(nullptr) : rational_to_json(basis.factor);
  j["trace"] = trace_to_json(basis.trace);
  return j;
}

}  // namespace

CommandResult cmd_kernel(const std::string& pair_text, const std::string& config_text) {
  RunConfig cfg = parse_config(config_text);
  SymbolPair pair = parse_pair(parse_text(pair_text, "pair"), "pair");
  if (!pair.is_rational())
    fail(ErrorCode::UnsupportedSymbol, "kernel computation needs rational symbols");
  KernelBasis basis = kernel_plus(pair);
  KernelVerification v = verify_kernel(pair, basis, cfg.oracle);
  json j = kernel_body(basis);
  j["verified"] =
      json{{"oracle_dim", v.oracle_dim}, {"max_angle", v.max_angle}, {"residual", v.residual}};
  return CommandResult{j, v.ok};
}

CommandResult cmd_minimal(const std::string& request_text, const std::string& config_text) {
  RunConfig cfg = parse_config(config_text);
  json req = parse_text(request_text, "request");
  if (!req.is_object() || !req.contains("a") || !req.contains("b"))
    fail(ErrorCode::ParseError, "request: expected {\"a\": sym, \"b\": sym}");
  BoundarySymbol a = parse_symbol(req["a"], "a");
  BoundarySymbol b_sym = parse_symbol(req["b"], "b");
  if (!b_sym.is_rational()) fail(ErrorCode::NotInHardySpace, "b must be rational and analytic");
  MinimalKernel mk = minimal_kernel_containing(b_sym.rational(), a, cfg.seed);

  json j;
  j["symbol_token"] = mk.symbol.token();
  json sym;
  sym["rational"] = rational_to_json(mk.symbol.rational());
  json atoms = json::array();
  for (const auto& ap : mk.symbol.atoms())
    atoms.push_back(json{{"point", {ap.atom.point.real() + 0.0, ap.atom.point.imag() + 0.0}},
                         {"mass", ap.atom.mass},
                         {"exp", ap.exponent}});
  sym["atoms"] = atoms;
  j["symbol"] = sym;
  j["trace"] = trace_to_json(mk.trace);
  bool ok = true;
  if (mk.basis) {
    json body = kernel_body(*mk.basis);
    SymbolPair pair = pair_with_one(mk.symbol);
    KernelVerification v = verify_kernel(pair, *mk.basis, cfg.oracle);
    body["verified"] =
        json{{"oracle_dim", v.oracle_dim}, {"max_angle", v.max_angle}, {"residual", v.residual}};
    j["basis"] = body;
    ok = v.ok;
  } else {
    j["basis"] = nullptr;
  }
  j["maximal"] = mk.maximal ? rational_to_json(*mk.maximal) : json(nullptr);
  return CommandResult{j, ok};
}

CommandResult cmd_atto(const std::string& spec_text, const std::string& config_text) {
  RunConfig cfg = parse_config(config_text);
  AttoSpec spec = parse_atto_spec(parse_text(spec_text, "spec"), "spec");
  AttoSymbolParts parts = build_symbol(spec);
  KernelBasis basis = atto_kernel(spec);
  AttoVerification v = verify_atto(spec, basis, cfg.oracle);

  json j = kernel_body(basis);
  j["m"] = parts.m;
  j["n_plus"] = parts.n_plus;
  j["n_minus"] = parts.n_minus;
  j["n_circle"] = parts.n_circle;
  j["verified"] = json{{"numeric_dim", v.numeric_dim},
                       {"max_angle", v.max_angle},
                       {"phi_form_agreement", v.phi_form_agreement}};
  bool ok = v.ok;
  if (cfg.alpha_check) {
    BlaschkeProduct second = BlaschkeProduct::z_power(parts.m + spec.theta.degree());
    double angle = alpha_independence_angle(spec, second, basis, cfg.oracle);
    j["alpha_check"] = json{{"second_alpha_degree", second.degree()}, {"max_angle", angle}};
    ok = ok && angle <= 1e-6;
  } else {
    j["alpha_check"] = nullptr;
  }
  return CommandResult{j, ok};
}

CommandResult cmd_verify(const std::string& request_text, const std::string& config_text) {
  RunConfig cfg = parse_config(config_text);
  json req = parse_text(request_text, "request");
  SymbolPair pair = parse_pair(req, "pair");

  json j;
  bool ok = true;
  if (req.contains("claim")) {
    const json& c = req["claim"];
    if (!c.is_object() || !c.contains("dim")) fail(ErrorCode::ParseError, "claim: expected {\"dim\", \"factor\"}");
    int claim_dim = parse_int(c["dim"], "claim.dim");
    KernelBasis claimed;
    claimed.span_dim = claim_dim;
    if (claim_dim > 0) {
      if (!c.contains("factor") || !c["factor"].is_object() || !c["factor"].contains("num") ||
          !c["factor"].contains("den"))
        fail(ErrorCode::ParseError, "claim.factor: expected {\"num\":factored, \"den\":factored}");
      claimed.factor = RationalFn(parse_factored(c["factor"]["num"], "claim.factor.num"),
                                  parse_factored(c["factor"]["den"], "claim.factor.den"));
    }
    KernelVerification v = verify_kernel(pair, claimed, cfg.oracle);
    j["claim_dim"] = claim_dim;
    j["oracle_dim"] = v.oracle_dim;
    j["max_angle"] = v.max_angle;
    j["residual"] = v.residual;
    ok = v.ok;
  } else {
    KernelBasis basis = kernel_plus(pair);
    KernelVerification v = verify_kernel(pair, basis, cfg.oracle);
    j["engine_dim"] = basis.span_dim;
    j["oracle_dim"] = v.oracle_dim;
    j["max_angle"] = v.max_angle;
    j["residual"] = v.residual;
    ok = v.ok;
  }
  j["match"] = ok;
  return CommandResult{j, ok};
}

CommandResult cmd_decompose(const std::string& pair_text, int k, const std::string& config_text) {
  RunConfig cfg = parse_config(config_text);
  SymbolPair pair = parse_pair(parse_text(pair_text, "pair"), "pair");
  Decomposition dec = decompose(pair, k);
  KernelBasis full = kernel_plus(pair);
  KernelVerification v = verify_kernel(pair, full, cfg.oracle);

  json j;
  j["k"] = k;
  j["dim"] = full.span_dim;
  json psis = json::array();
  for (const auto& p : dec.psis) psis.push_back(rational_to_json(p.plus));
  j["psis"] = psis;
  j["reduced"] = kernel_body(dec.reduced);
  j["verified"] =
      json{{"oracle_dim", v.oracle_dim}, {"max_angle", v.max_angle}, {"residual", v.residual}};
  return CommandResult{j, v.ok};
}

}  // namespace pk
