#include "reports.hpp"

#include "errors.hpp"
#include "seifert.hpp"
#include "whitehead.hpp"

#include <algorithm>
#include <future>
#include <thread>

namespace slicegate::reports {

namespace {

Json envelope(const char* command) {
  Json out;
  out["command"] = command;
  return out;
}

Json rational_text(const Rational& r) { return to_string(r); }

Json pl_text(const PLFunction& f) {
  Json pts = Json::array();
  for (const auto& bp : f.breakpoints()) pts.push_back(Json::array({to_string(bp.s), to_string(bp.value)}));
  Json out;
  out["breakpoints"] = pts;
  return out;
}

Json fox_milnor_json(const LaurentPoly& delta) {
  Json out;
  try {
    FoxMilnorResult fm = fox_milnor(delta);
    out["passes"] = fm.passes;
    out["witness"] = fm.witness ? json::from_poly(*fm.witness) : Json(nullptr);
    out["witness_text"] = fm.witness ? Json(fm.witness->to_string()) : Json(nullptr);
    out["reason"] = fm.reason;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Budget) throw;
    out["passes"] = nullptr;
    out["witness"] = nullptr;
    out["witness_text"] = nullptr;
    out["reason"] = e.what();
  }
  return out;
}

Rational upsilon_of(const KnotStore& store, const std::string& name) {
  const KnotRecord& r = store.lookup(name);
  if (!r.invariants.upsilon) fail(ErrorCode::MissingInvariant, name + " has no stored Upsilon function");
  return upsilon_little(*r.invariants.upsilon);
}

/// A knot name from the store, else a rational literal.
Rational upsilon_value(const KnotStore& store, const std::string& source) {
  if (store.find(source)) return upsilon_of(store, source);
  try {
    return parse_rational(source);
  } catch (const Error&) {
    fail(ErrorCode::NotFound, "'" + source + "' is neither a stored knot nor a rational");
  }
}

Json obstruct_entry(const KnotRecord& record, const AggregateOptions& options) {
  try {
    return json::from_report(aggregate(record, options));
  } catch (const Error& e) {
    Json out;
    out["name"] = record.name;
    out["error"] = {{"code", error_code_name(e.code())}, {"message", e.what()}};
    return out;
  }
}

}  // namespace

KnotRecord resolve(const KnotStore& store, const KnotRef& ref) {
  if (ref.name.has_value() == ref.matrix.has_value()) {
    fail(ErrorCode::InvalidArgument, "give exactly one of a knot name or a Seifert matrix");
  }
  if (ref.name) return store.lookup(*ref.name);
  KnotRecord r;
  r.name = "matrix";
  r.seifert_matrix = *ref.matrix;
  r.provenance["seifert_matrix"] = Provenance::Computed;
  return r;
}

Json invariants(const KnotStore& store, const KnotRef& ref, const std::vector<Rational>& angles) {
  const KnotRecord record = resolve(store, ref);
  Json out = envelope("invariants");
  out["name"] = record.name;

  std::optional<LaurentPoly> delta = record.alexander;
  if (record.seifert_matrix) {
    const SeifertMatrix& v = *record.seifert_matrix;
    out["seifert_matrix"] = json::from_matrix(v);
    out["signature"] = signature(v);
    out["arf"] = v.size() <= kMaxArfSize ? Json(arf(v)) : Json(nullptr);
    delta = alexander(v);
    out["determinant"] = json::from_bigint(determinant(v));
    out["genus_bounds"] = json::from_bounds(genus_bounds_from_matrix(v));
  } else {
    if (record.sigma) out["signature"] = *record.sigma;
    if (record.arf) out["arf"] = *record.arf;
  }
  if (delta) {
    out["alexander"] = json::from_poly(*delta);
    out["alexander_text"] = delta->to_string();
    const Rational at_minus_one = delta->evaluate(-1);
    if (!record.seifert_matrix) out["determinant"] = json::from_bigint(abs(numerator(at_minus_one)));
    const Rational at_one = delta->evaluate(1);
    if (at_one == 1 || at_one == -1) out["arf_murasugi"] = arf_murasugi(*delta);
    out["fox_milnor"] = fox_milnor_json(*delta);
  }

  Json lt = Json::array();
  if (!angles.empty()) {
    if (!record.seifert_matrix) fail(ErrorCode::MissingInvariant, record.name + " has no Seifert matrix");
    for (const Rational& a : angles) {
      const LevineTristram r = levine_tristram(*record.seifert_matrix, a);
      Json entry;
      entry["angle"] = to_string(a);
      entry["singular"] = r.singular;
      entry["signature"] = r.singular ? Json(nullptr) : Json(r.signature);
      entry["approximate"] = !r.singular;
      lt.push_back(entry);
    }
  }
  out["levine_tristram"] = lt;
  out["diagnostics"] = record.diagnostics;
  return out;
}

Json obstruct(const KnotStore& store, const KnotRef& ref, const AggregateOptions& options) {
  Json out = envelope("obstruct");
  out["report"] = json::from_report(aggregate(resolve(store, ref), options));
  return out;
}

Json obstruct_all(const KnotStore& store, const AggregateOptions& options, bool parallel) {
  std::vector<const KnotRecord*> records;
  for (const auto& [name, r] : store.records()) records.push_back(&r);
  std::vector<Json> results(records.size());

  if (parallel && records.size() > 1) {
    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::min<std::size_t>(records.size(), 16));
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w) {
      jobs.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < records.size(); i += workers) results[i] = obstruct_entry(*records[i], options);
      }));
    }
    for (auto& j : jobs) j.get();
  } else {
    for (std::size_t i = 0; i < records.size(); ++i) results[i] = obstruct_entry(*records[i], options);
  }

  Json out = envelope("obstruct");
  out["reports"] = results;
  return out;
}

Json whitehead(const KnotStore& store, const WhiteheadParams& params, const AggregateOptions& options) {
  whitehead::check_params(params);
  const KnotRecord& companion = store.lookup(params.companion);
  const KnotRecord record = whitehead::make_record(params, companion);

  Json out = envelope("whitehead");
  out["name"] = record.name;
  out["params"] = {{"clasp", params.clasp == Clasp::Positive ? "+" : "-"},
                   {"twist", params.twist},
                   {"framing", params.framing},
                   {"companion", params.companion},
                   {"effective_twist", params.effective_twist()},
                   {"half_twist", params.half_twist()}};

  const LaurentPoly formula = whitehead::alexander_formula(params);
  out["alexander_formula"] = json::from_poly(formula);
  out["alexander_formula_text"] = formula.to_string();
  if (record.seifert_matrix) out["seifert_matrix"] = json::from_matrix(*record.seifert_matrix);
  if (record.alexander) out["alexander"] = json::from_poly(*record.alexander);
  if (record.sigma) out["sigma"] = *record.sigma;
  if (record.arf) out["arf"] = *record.arf;

  auto tagged = [&](const char* field, const auto& value) {
    return Json{{"value", value}, {"provenance", provenance_name(record.provenance.at(field))}};
  };
  if (record.invariants.tau) out["tau"] = tagged("tau", *record.invariants.tau);
  if (record.invariants.epsilon) out["epsilon"] = tagged("epsilon", *record.invariants.epsilon);
  if (record.invariants.upsilon) {
    const Rational ups = upsilon_little(*record.invariants.upsilon);
    out["upsilon"] = pl_text(*record.invariants.upsilon);
    out["upsilon_at_1"] = rational_text(ups);
  }

  out["gamma4_whitehead"] = json::from_bounds(whitehead::gamma4_whitehead(params));
  const std::int64_t q = whitehead::cable_target(params);
  out["cable_target"] = {{"q", q}, {"provenance", provenance_name(Provenance::Reconstructed)}};
  if (record.invariants.upsilon) {
    const IntRange e = euler_number_range(upsilon_little(*record.invariants.upsilon), q);
    out["euler_range"] = Json::array({e.lo, e.hi});
  }
  out["report"] = json::from_report(aggregate(record, options));
  out["diagnostics"] = record.diagnostics;
  return out;
}

Json cable_bounds(const KnotStore& store, const std::string& source, std::int64_t p, std::int64_t q) {
  PLFunction f = PLFunction::zero();
  std::string label = source;
  if (!source.empty() && (source.front() == '{' || source.front() == '[')) {
    f = json::to_pl(json::parse(source));
    label = "inline";
  } else {
    const KnotRecord& r = store.lookup(source);
    if (!r.invariants.upsilon) fail(ErrorCode::MissingInvariant, source + " has no stored Upsilon function");
    f = *r.invariants.upsilon;
  }
  const CableEnvelope env = cable_sandwich(f, p, q);

  Json out = envelope("cable-bounds");
  out["source"] = label;
  out["p"] = p;
  out["q"] = q;
  out["upsilon"] = pl_text(f);
  out["domain"] = Json::array({"0", to_string(env.lower.domain_end())});
  out["lower"] = pl_text(env.lower);
  out["upper"] = pl_text(env.upper);
  if (p == 2 && q % 2 != 0) {
    const Rational lo = env.lower.eval(1);
    const Rational hi = env.upper.eval(1);
    const auto [clo, chi] = two_q_upsilon_interval(q);
    out["at_1"] = {{"lower", to_string(lo)}, {"upper", to_string(hi)}};
    out["corollary_interval"] = Json::array({to_string(clo), to_string(chi)});
    out["consistent"] = clo <= hi && lo <= chi;
  }
  return out;
}

Json cobordism(const KnotStore& store, const std::string& from, const std::string& to, std::int64_t euler,
               std::int64_t betti) {
  CobordismCheck c{upsilon_value(store, from), upsilon_value(store, to), euler, betti};
  const bool holds = cobordism_inequality(c);
  const Rational lhs = abs(c.upsilon_start - c.upsilon_end + Rational(euler, 4));
  Json out = envelope("cobordism");
  out["from"] = from;
  out["to"] = to;
  out["upsilon_from"] = rational_text(c.upsilon_start);
  out["upsilon_to"] = rational_text(c.upsilon_end);
  out["euler"] = euler;
  out["betti"] = betti;
  out["lhs"] = rational_text(lhs);
  out["rhs"] = rational_text(Rational(betti, 2));
  out["holds"] = holds;
  return out;
}

Json euler_range(const Rational& upsilon, std::int64_t q) {
  const IntRange e = euler_number_range(upsilon, q);
  Json out = envelope("euler-range");
  out["upsilon"] = rational_text(upsilon);
  out["q"] = q;
  out["euler_range"] = Json::array({e.lo, e.hi});
  return out;
}

Json import_result(const KnotStore& delta, const std::vector<RowDiagnostic>& diagnostics) {
  Json out = envelope("import");
  out["imported"] = delta.names();
  Json diags = Json::array();
  for (const auto& d : diagnostics) diags.push_back({{"row", d.row}, {"column", d.column}, {"message", d.message}});
  out["diagnostics"] = diags;
  return out;
}

}  // namespace slicegate::reports
