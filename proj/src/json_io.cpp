#include "json_io.hpp"

#include "errors.hpp"

namespace slicegate::json {

namespace {

void expect(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::Parse, what);
}

std::int64_t to_int(const Json& j, const std::string& what) {
  expect(j.is_number_integer(), what + " must be an integer");
  return j.get<std::int64_t>();
}

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
  }
}

Json from_bigint(const BigInt& v) {
  if (fits_int64(v)) return v.convert_to<std::int64_t>();
  return v.str();
}

BigInt to_bigint(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    Rational r = parse_rational(j.get<std::string>());
    expect(is_integer(r), "expected an integer, got '" + j.get<std::string>() + "'");
    return numerator(r);
  }
  fail(ErrorCode::Parse, "expected an integer");
}

Json from_rational(const Rational& r) {
  if (is_integer(r)) return from_bigint(numerator(r));
  return Json::array({from_bigint(numerator(r)), from_bigint(denominator(r))});
}

Rational to_rational(const Json& j) {
  if (j.is_array()) {
    expect(j.size() == 2, "rational must be [num, den]");
    BigInt den = to_bigint(j[1]);
    expect(den != 0, "zero denominator");
    return make_rational(to_bigint(j[0]), den);
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  return Rational(to_bigint(j));
}

Json from_poly(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({from_bigint(c), e}));
  return out;
}

LaurentPoly to_poly(const Json& j) {
  expect(j.is_array(), "polynomial must be a list of [coefficient, exponent] pairs");
  std::vector<std::pair<BigInt, int>> terms;
  std::optional<std::int64_t> last;
  for (const auto& term : j) {
    expect(term.is_array() && term.size() == 2, "polynomial term must be [coefficient, exponent]");
    const std::int64_t e = to_int(term[1], "exponent");
    expect(!last || e > *last, "polynomial exponents must be strictly increasing");
    expect(e >= -1'000'000 && e <= 1'000'000, "exponent out of range");
    last = e;
    terms.emplace_back(to_bigint(term[0]), static_cast<int>(e));
  }
  return LaurentPoly::from_terms(terms);
}

Json from_matrix(const SeifertMatrix& v) {
  Json rows = Json::array();
  for (const auto& row : v.entries()) rows.push_back(row);
  Json out;
  out["n"] = v.size();
  out["entries"] = rows;
  return out;
}

SeifertMatrix to_matrix(const Json& j) {
  expect(j.is_object() && j.contains("entries"), "matrix must be an object with 'entries'");
  const Json& rows = j["entries"];
  expect(rows.is_array(), "'entries' must be a list of rows");
  SeifertMatrix::Entries entries;
  for (const auto& row : rows) {
    expect(row.is_array(), "matrix row must be a list");
    std::vector<std::int64_t> r;
    for (const auto& x : row) r.push_back(to_int(x, "matrix entry"));
    entries.push_back(std::move(r));
  }
  if (j.contains("n")) {
    expect(to_int(j["n"], "'n'") == static_cast<std::int64_t>(entries.size()), "'n' does not match the entries");
  }
  return SeifertMatrix::create(std::move(entries));
}

Json from_pl(const PLFunction& f) {
  Json pts = Json::array();
  for (const auto& bp : f.breakpoints()) pts.push_back(Json::array({from_rational(bp.s), from_rational(bp.value)}));
  Json out;
  out["breakpoints"] = pts;
  return out;
}

PLFunction to_pl(const Json& j, bool require_upsilon) {
  const Json& pts = j.is_object() ? j.value("breakpoints", Json()) : j;
  expect(pts.is_array(), "PL function must have a 'breakpoints' list");
  std::vector<PLFunction::Breakpoint> bps;
  for (const auto& p : pts) {
    expect(p.is_array() && p.size() == 2, "breakpoint must be [s, value]");
    bps.push_back({to_rational(p[0]), to_rational(p[1])});
  }
  return require_upsilon ? PLFunction::upsilon(std::move(bps)) : PLFunction::from_breakpoints(std::move(bps));
}

Json from_interval(const Interval& iv) {
  return Json::array({iv.lo, iv.hi ? Json(*iv.hi) : Json(nullptr)});
}

Interval to_interval(const Json& j) {
  if (j.is_number_integer()) return Interval::exact(j.get<std::int64_t>());
  expect(j.is_array() && j.size() == 2, "interval must be [lo, hi]");
  Interval iv{to_int(j[0], "interval lower bound"), std::nullopt};
  if (!j[1].is_null()) iv.hi = to_int(j[1], "interval upper bound");
  expect(!iv.empty(), "interval lower bound exceeds upper bound");
  return iv;
}

Json from_bounds(const GenusBounds& b) {
  Json out;
  out["g4"] = from_interval(b.g4);
  out["gamma4"] = from_interval(b.gamma4);
  if (b.g3) out["g3"] = from_interval(*b.g3);
  if (b.gamma3) out["gamma3"] = from_interval(*b.gamma3);
  return out;
}

Json from_record(const KnotRecord& r) {
  Json out;
  out["name"] = r.name;
  if (r.seifert_matrix) out["seifert_matrix"] = from_matrix(*r.seifert_matrix);
  if (r.alexander) out["alexander"] = from_poly(*r.alexander);
  if (r.sigma) out["sigma"] = *r.sigma;
  if (r.arf) out["arf"] = *r.arf;
  Json inv = Json::object();
  const auto& c = r.invariants;
  if (c.tau) inv["tau"] = *c.tau;
  if (c.epsilon) inv["epsilon"] = *c.epsilon;
  if (c.nu) inv["nu"] = *c.nu;
  if (c.s) inv["s"] = *c.s;
  if (c.upsilon) inv["upsilon"] = from_pl(*c.upsilon);
  if (c.g4) inv["g4"] = from_interval(*c.g4);
  if (c.gamma4) inv["gamma4"] = from_interval(*c.gamma4);
  if (c.g3) inv["g3"] = from_interval(*c.g3);
  if (c.gamma3) inv["gamma3"] = from_interval(*c.gamma3);
  out["invariants"] = inv;
  if (r.whitehead) {
    const auto& w = *r.whitehead;
    out["whitehead"] = {{"clasp", w.clasp == Clasp::Positive ? "+" : "-"},
                        {"twist", w.twist},
                        {"framing", w.framing},
                        {"companion", w.companion}};
  }
  Json prov = Json::object();
  for (const auto& [field, tag] : r.provenance) prov[field] = provenance_name(tag);
  out["provenance"] = prov;
  if (!r.diagnostics.empty()) out["diagnostics"] = r.diagnostics;
  return out;
}

KnotRecord to_record(const Json& j) {
  expect(j.is_object(), "record must be an object");
  expect(j.contains("name") && j["name"].is_string(), "record needs a string 'name'");
  KnotRecord r;
  r.name = j["name"].get<std::string>();
  if (j.contains("seifert_matrix")) r.seifert_matrix = to_matrix(j["seifert_matrix"]);
  if (j.contains("alexander")) r.alexander = to_poly(j["alexander"]);
  if (j.contains("sigma")) r.sigma = to_int(j["sigma"], "sigma");
  if (j.contains("arf")) r.arf = static_cast<int>(to_int(j["arf"], "arf"));
  if (j.contains("invariants")) {
    const Json& inv = j["invariants"];
    expect(inv.is_object(), "'invariants' must be an object");
    auto& c = r.invariants;
    if (inv.contains("tau")) c.tau = to_int(inv["tau"], "tau");
    if (inv.contains("epsilon")) c.epsilon = static_cast<int>(to_int(inv["epsilon"], "epsilon"));
    if (inv.contains("nu")) c.nu = to_int(inv["nu"], "nu");
    if (inv.contains("s")) c.s = to_int(inv["s"], "s");
    if (inv.contains("upsilon")) c.upsilon = to_pl(inv["upsilon"]);
    if (inv.contains("g4")) c.g4 = to_interval(inv["g4"]);
    if (inv.contains("gamma4")) c.gamma4 = to_interval(inv["gamma4"]);
    if (inv.contains("g3")) c.g3 = to_interval(inv["g3"]);
    if (inv.contains("gamma3")) c.gamma3 = to_interval(inv["gamma3"]);
  }
  if (j.contains("whitehead")) {
    const Json& w = j["whitehead"];
    expect(w.is_object(), "'whitehead' must be an object");
    WhiteheadParams p;
    const std::string clasp = w.value("clasp", "+");
    expect(clasp == "+" || clasp == "-", "clasp must be '+' or '-'");
    p.clasp = clasp == "+" ? Clasp::Positive : Clasp::Negative;
    p.twist = to_int(w.value("twist", Json(0)), "twist");
    p.framing = to_int(w.value("framing", Json(0)), "framing");
    p.companion = w.value("companion", "");
    r.whitehead = p;
  }
  if (j.contains("provenance")) {
    for (const auto& [field, tag] : j["provenance"].items()) {
      expect(tag.is_string(), "provenance tags must be strings");
      r.provenance[field] = parse_provenance(tag.get<std::string>());
    }
  }
  if (j.contains("diagnostics")) {
    for (const auto& d : j["diagnostics"]) r.diagnostics.push_back(d.get<std::string>());
  }
  return r;
}

Json from_report(const ObstructionReport& r) {
  Json out;
  out["name"] = r.name;
  out["bounds"] = from_bounds(r.bounds);
  out["verdict"] = {{"topologically_slice", tri_name(r.verdict.topologically_slice)},
                    {"smoothly_slice", tri_name(r.verdict.smoothly_slice)},
                    {"nonorientably_slice", tri_name(r.verdict.nonorientably_slice)}};
  Json rules = Json::array();
  for (const auto& a : r.applied_rules) {
    rules.push_back({{"rule", a.rule}, {"anchor", a.anchor}, {"contribution", a.contribution}});
  }
  out["applied_rules"] = rules;
  Json facts = Json::object();
  const auto& f = r.facts;
  if (f.sigma) facts["sigma"] = *f.sigma;
  if (f.arf) facts["arf"] = *f.arf;
  if (f.alexander) facts["alexander"] = from_poly(*f.alexander);
  if (f.determinant) facts["determinant"] = from_bigint(*f.determinant);
  if (f.fox_milnor_passes) facts["fox_milnor"] = *f.fox_milnor_passes ? "passes" : "fails";
  if (f.fox_milnor_witness) facts["fox_milnor_witness"] = from_poly(*f.fox_milnor_witness);
  if (f.upsilon) facts["upsilon"] = to_string(*f.upsilon);
  out["facts"] = facts;
  out["diagnostics"] = r.diagnostics;
  return out;
}

}  // namespace slicegate::json
