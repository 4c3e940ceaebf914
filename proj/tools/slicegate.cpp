// slicegate command-line tool. Every result comes from the C API as a JSON
// document; --json prints it verbatim, otherwise it is rendered as text.

#include "slicegate/slicegate.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitObstructed = 1;
constexpr int kExitError = 2;

struct CliError {
  std::string message;
};

void check(sg_status s) {
  if (s != SG_OK) throw CliError{std::string(sg_status_name(s)) + ": " + sg_last_error()};
}

/// Take ownership of a library string, returning it parsed.
Json take_json(char* raw) {
  std::unique_ptr<char, void (*)(char*)> owned(raw, sg_string_free);
  return Json::parse(owned.get());
}

using StorePtr = std::unique_ptr<sg_store, void (*)(sg_store*)>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{"io: cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string interval(const Json& iv) {
  return "[" + iv[0].dump() + "," + (iv[1].is_null() ? std::string("∞)") : iv[1].dump() + "]");
}

std::string matrix_text(const Json& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m["entries"].size(); ++i) out += (i ? ", " : "") + m["entries"][i].dump();
  return out + "]";
}

std::string pl_text(const Json& f) {
  std::string out;
  for (const auto& bp : f["breakpoints"]) {
    out += (out.empty() ? "" : " ") + std::string("(") + bp[0].get<std::string>() + ", " + bp[1].get<std::string>() + ")";
  }
  return out;
}

std::string poly_text(const Json& terms) {
  // Same rendering as the library's LaurentPoly::to_string, from the term list.
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    std::string c = (*it)[0].is_string() ? (*it)[0].get<std::string>() : (*it)[0].dump();
    const long e = (*it)[1].get<long>();
    const bool neg = c.front() == '-';
    if (neg) c.erase(0, 1);
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (e == 0) {
      out += c;
      continue;
    }
    if (c != "1") out += c;
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "0" : out;
}

void print_diagnostics(const Json& diags) {
  for (const auto& d : diags) {
    if (d.is_string()) std::cerr << "warning: " << d.get<std::string>() << "\n";
  }
}

bool smoothly_obstructed(const Json& report) {
  return report.contains("verdict") && report["verdict"]["smoothly_slice"] == "no";
}

std::string topological_phrase(const Json& report) {
  const std::string v = report["verdict"]["topologically_slice"];
  if (v == "yes") {
    const Json& facts = report["facts"];
    const bool trivial = facts.contains("alexander") && facts["alexander"] == Json::parse("[[1,0]]");
    return trivial ? "topologically slice (Δ = 1)" : "topologically slice";
  }
  if (v == "no") return "not topologically slice";
  return "topologically slice: unknown";
}

void render_report(const Json& r, std::ostream& os) {
  if (r.contains("error")) {
    os << r["name"].get<std::string>() << ": error: " << r["error"]["code"].get<std::string>() << ": "
       << r["error"]["message"].get<std::string>() << "\n";
    return;
  }
  const Json& v = r["verdict"];
  const Json& b = r["bounds"];
  os << r["name"].get<std::string>() << ": " << topological_phrase(r)
     << "; smoothly slice: " << v["smoothly_slice"].get<std::string>()
     << "; nonorientably slice: " << v["nonorientably_slice"].get<std::string>() << "\n";
  os << "  g4 ∈ " << interval(b["g4"]) << "; γ₄ ∈ " << interval(b["gamma4"]);
  if (b.contains("g3")) os << "; g3 ∈ " << interval(b["g3"]);
  if (b.contains("gamma3")) os << "; γ₃ ∈ " << interval(b["gamma3"]);
  os << "\n";
  const Json& f = r["facts"];
  if (f.contains("sigma")) os << "  signature: " << f["sigma"].dump() << "\n";
  if (f.contains("arf")) os << "  Arf: " << f["arf"].dump() << "\n";
  if (f.contains("alexander")) os << "  Alexander: " << poly_text(f["alexander"]) << "\n";
  if (f.contains("determinant")) os << "  determinant: " << f["determinant"].dump() << "\n";
  if (f.contains("fox_milnor")) {
    os << "  Fox-Milnor: " << f["fox_milnor"].get<std::string>();
    if (f.contains("fox_milnor_witness")) os << " (witness " << poly_text(f["fox_milnor_witness"]) << ")";
    os << "\n";
  }
  if (f.contains("upsilon")) os << "  upsilon: " << f["upsilon"].get<std::string>() << "\n";
  os << "  rules:\n";
  for (const auto& a : r["applied_rules"]) {
    os << "    " << a["rule"].get<std::string>() << ": " << a["contribution"].get<std::string>() << "\n";
  }
}

void render_invariants(const Json& r, std::ostream& os) {
  os << r["name"].get<std::string>() << "\n";
  if (r.contains("seifert_matrix")) os << "  Seifert matrix: " << matrix_text(r["seifert_matrix"]) << "\n";
  if (r.contains("signature")) os << "  signature: " << r["signature"].dump() << "\n";
  if (r.contains("arf")) {
    os << "  Arf: " << r["arf"].dump();
    if (r.contains("arf_murasugi")) os << " (Murasugi: " << r["arf_murasugi"].dump() << ")";
    os << "\n";
  } else if (r.contains("arf_murasugi")) {
    os << "  Arf (Murasugi): " << r["arf_murasugi"].dump() << "\n";
  }
  if (r.contains("determinant")) os << "  determinant: " << r["determinant"].dump() << "\n";
  if (r.contains("alexander_text")) os << "  Alexander: " << r["alexander_text"].get<std::string>() << "\n";
  if (r.contains("fox_milnor")) {
    const Json& fm = r["fox_milnor"];
    os << "  Fox-Milnor: "
       << (fm["passes"].is_null() ? "undecided" : fm["passes"].get<bool>() ? "passes" : "fails");
    if (!fm["witness_text"].is_null()) os << " (witness " << fm["witness_text"].get<std::string>() << ")";
    os << " - " << fm["reason"].get<std::string>() << "\n";
  }
  if (r.contains("genus_bounds")) {
    const Json& b = r["genus_bounds"];
    os << "  from this surface: g4 ∈ " << interval(b["g4"]) << "; γ₄ ∈ " << interval(b["gamma4"]) << "\n";
  }
  for (const auto& lt : r["levine_tristram"]) {
    os << "  Levine-Tristram at " << lt["angle"].get<std::string>() << ": ";
    if (lt["singular"].get<bool>()) {
      os << "singular\n";
    } else {
      os << lt["signature"].dump() << " (approximate)\n";
    }
  }
}

void render_whitehead(const Json& r, std::ostream& os) {
  const Json& rep = r["report"];
  os << r["name"].get<std::string>() << "\n";
  os << "  " << topological_phrase(rep) << "; smoothly slice: " << rep["verdict"]["smoothly_slice"].get<std::string>()
     << "; γ₄ ∈ " << interval(rep["bounds"]["gamma4"]) << "; cable target q = " << r["cable_target"]["q"].dump()
     << "\n";
  os << "  effective twist: " << r["params"]["effective_twist"].dump()
     << (r["params"]["half_twist"].get<bool>() ? " (half-twist regime)" : "") << "\n";
  if (r.contains("seifert_matrix")) os << "  Seifert matrix: " << matrix_text(r["seifert_matrix"]) << "\n";
  os << "  Alexander: " << r["alexander_formula_text"].get<std::string>() << "\n";
  if (r.contains("sigma")) os << "  signature: " << r["sigma"].dump() << "\n";
  if (r.contains("arf")) os << "  Arf: " << r["arf"].dump() << "\n";
  for (const char* key : {"tau", "epsilon"}) {
    if (r.contains(key)) {
      os << "  " << key << ": " << r[key]["value"].dump() << " (" << r[key]["provenance"].get<std::string>() << ")\n";
    }
  }
  if (r.contains("upsilon")) {
    os << "  Upsilon: " << pl_text(r["upsilon"]) << "\n";
    os << "  upsilon: " << r["upsilon_at_1"].get<std::string>() << "\n";
  }
  if (r.contains("euler_range")) {
    os << "  normal Euler numbers: [" << r["euler_range"][0].dump() << ", " << r["euler_range"][1].dump() << "]\n";
  }
  os << "  rules:\n";
  for (const auto& a : rep["applied_rules"]) {
    os << "    " << a["rule"].get<std::string>() << ": " << a["contribution"].get<std::string>() << "\n";
  }
}

void render_cable(const Json& r, std::ostream& os) {
  os << "(" << r["p"].dump() << "," << r["q"].dump() << ")-cable of " << r["source"].get<std::string>() << " on [0, "
     << r["domain"][1].get<std::string>() << "]\n";
  os << "  Upsilon: " << pl_text(r["upsilon"]) << "\n";
  os << "  lower: " << pl_text(r["lower"]) << "\n";
  os << "  upper: " << pl_text(r["upper"]) << "\n";
  if (r.contains("at_1")) {
    os << "  at s = 1: [" << r["at_1"]["lower"].get<std::string>() << ", " << r["at_1"]["upper"].get<std::string>()
       << "]; (2,q) interval [" << r["corollary_interval"][0].get<std::string>() << ", "
       << r["corollary_interval"][1].get<std::string>() << "]; "
       << (r["consistent"].get<bool>() ? "consistent" : "INCONSISTENT") << "\n";
  }
}

void render(const Json& r, std::ostream& os) {
  const std::string cmd = r["command"];
  if (cmd == "invariants") {
    render_invariants(r, os);
  } else if (cmd == "obstruct") {
    if (r.contains("reports")) {
      for (const auto& rep : r["reports"]) render_report(rep, os);
    } else {
      render_report(r["report"], os);
    }
  } else if (cmd == "whitehead") {
    render_whitehead(r, os);
  } else if (cmd == "cable-bounds") {
    render_cable(r, os);
  } else if (cmd == "cobordism") {
    os << "|" << r["upsilon_from"].get<std::string>() << " - " << r["upsilon_to"].get<std::string>() << " + "
       << r["euler"].dump() << "/4| = " << r["lhs"].get<std::string>() << (r["holds"].get<bool>() ? " <= " : " > ")
       << r["rhs"].get<std::string>() << ": " << (r["holds"].get<bool>() ? "holds" : "violated") << "\n";
  } else if (cmd == "euler-range") {
    os << "normal Euler numbers for upsilon = " << r["upsilon"].get<std::string>() << ", q = " << r["q"].dump()
       << ": [" << r["euler_range"][0].dump() << ", " << r["euler_range"][1].dump() << "]\n";
  } else if (cmd == "import") {
    os << "imported " << r["imported"].size() << " record(s)";
    for (const auto& n : r["imported"]) os << " " << n.get<std::string>();
    os << "\n";
    for (const auto& d : r["diagnostics"]) {
      os << "  row " << d["row"].dump() << ", " << d["column"].get<std::string>() << ": "
         << d["message"].get<std::string>() << "\n";
    }
  } else if (cmd == "show") {
    os << r["record"].dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slicegate: knot concordance invariants and sliceness obstructions"};
  app.set_version_flag("--version", std::string(sg_version()));
  app.require_subcommand(1, 1);
  app.fallthrough();

  bool as_json = false;
  bool fail_on_obstruction = false;
  std::string store_path;
  std::string oss_name = "minus";
  app.add_flag("--json", as_json, "Print the JSON report instead of text");
  app.add_flag("--fail-on-obstruction", fail_on_obstruction, "Exit 1 when a knot is shown not smoothly slice");
  app.add_option("--store", store_path, "Knot store JSON file (default: $SLICEGATE_STORE, else built-in table)");
  app.add_option("--oss-convention", oss_name, "Sign convention of the OSS non-orientable bound")
      ->check(CLI::IsMember({"minus", "plus"}));

  std::optional<std::string> knot_name;
  std::optional<std::string> matrix_file;
  std::vector<std::string> angles;
  auto* inv = app.add_subcommand("invariants", "Classical invariants of a knot");
  inv->add_option("name", knot_name, "Stored knot name");
  inv->add_option("--matrix", matrix_file, "Seifert matrix JSON file");
  inv->add_option("--angle", angles, "Levine-Tristram angle as a fraction of a full turn (repeatable)");

  std::string clasp = "+";
  std::int64_t twist = 0;
  std::int64_t framing = 0;
  std::string companion;
  auto* wh = app.add_subcommand("whitehead", "Twisted Whitehead double of a stored companion");
  wh->add_option("--clasp", clasp, "Clasp sign")->check(CLI::IsMember({"+", "-"}));
  wh->add_option("--twist", twist, "Twist parameter t")->required();
  wh->add_option("--framing", framing, "Gluing framing offset");
  wh->add_option("--companion", companion, "Companion knot name")->required();

  bool all = false;
  bool parallel = false;
  auto* ob = app.add_subcommand("obstruct", "Aggregate sliceness obstructions");
  ob->add_option("name", knot_name, "Stored knot name");
  ob->add_option("--matrix", matrix_file, "Seifert matrix JSON file");
  ob->add_flag("--all", all, "Every record in the store");
  ob->add_flag("--parallel", parallel, "With --all: evaluate records concurrently");

  std::int64_t p = 2;
  std::int64_t q = 1;
  std::string source;
  auto* cb = app.add_subcommand("cable-bounds", "Upsilon envelopes for a (p,q)-cable");
  cb->add_option("--p", p, "Cable winding number")->required();
  cb->add_option("--q", q, "Cable slope")->required();
  cb->add_option("--upsilon", source, "Stored knot name, inline Upsilon JSON or a JSON file")->required();

  std::string from;
  std::string to;
  std::int64_t euler = 0;
  std::int64_t betti = 1;
  auto* co = app.add_subcommand("cobordism", "Check the genus-1 cobordism inequality");
  co->add_option("--from", from, "Knot name or upsilon value")->required();
  co->add_option("--to", to, "Knot name or upsilon value")->required();
  co->add_option("--euler", euler, "Normal Euler number")->required();
  co->add_option("--betti", betti, "First Betti number of the cobordism");

  std::string upsilon;
  auto* er = app.add_subcommand("euler-range", "Normal Euler numbers allowed by the (2,q)-cable bound");
  er->add_option("--upsilon", upsilon, "upsilon of the double, e.g. -1/2")->required();
  er->add_option("--q", q, "Odd cable slope")->required();

  std::string csv_path;
  std::vector<std::string> maps;
  auto* im = app.add_subcommand("import", "Merge a CSV table into the store");
  im->add_option("csv", csv_path, "CSV file")->required();
  im->add_option("--map", maps, "field=Column header (repeatable)")->required();

  auto* sh = app.add_subcommand("show", "Print a stored record");
  sh->add_option("name", knot_name, "Stored knot name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  const sg_oss_convention oss = oss_name == "plus" ? SG_OSS_PLUS : SG_OSS_MINUS;
  if (store_path.empty()) {
    if (const char* env = std::getenv("SLICEGATE_STORE")) store_path = env;
  }

  try {
    sg_store* raw = nullptr;
    if (!store_path.empty() && std::filesystem::exists(store_path)) {
      check(sg_store_load(store_path.c_str(), &raw));
    } else {
      check(sg_store_new_seeded(&raw));
    }
    StorePtr store(raw, sg_store_free);

    char* out = nullptr;
    std::vector<std::string> obstruction_reports;
    if (app.got_subcommand(inv) || (app.got_subcommand(ob) && !all)) {
      if (knot_name.has_value() == matrix_file.has_value()) {
        throw CliError{"invalid-argument: give exactly one of a knot name or --matrix"};
      }
      const std::optional<std::string> matrix = matrix_file ? std::optional(read_file(*matrix_file)) : std::nullopt;
      const char* name = knot_name ? knot_name->c_str() : nullptr;
      const char* mjson = matrix ? matrix->c_str() : nullptr;
      if (app.got_subcommand(inv)) {
        std::optional<std::string> angles_json;
        if (!angles.empty()) angles_json = Json(angles).dump();
        check(sg_invariants_report(store.get(), name, mjson, angles_json ? angles_json->c_str() : nullptr, &out));
      } else {
        check(sg_obstruct_report(store.get(), name, mjson, oss, &out));
      }
    } else if (app.got_subcommand(ob)) {
      if (knot_name || matrix_file) throw CliError{"invalid-argument: --all takes no knot"};
      check(sg_obstruct_all_report(store.get(), oss, parallel ? 1 : 0, &out));
    } else if (app.got_subcommand(wh)) {
      check(sg_whitehead_report(store.get(), clasp == "+" ? SG_CLASP_POSITIVE : SG_CLASP_NEGATIVE, twist, framing,
                                companion.c_str(), oss, &out));
    } else if (app.got_subcommand(cb)) {
      std::string src = source;
      if (src.front() != '{' && src.front() != '[' && std::filesystem::is_regular_file(src)) src = read_file(src);
      check(sg_cable_bounds_report(store.get(), src.c_str(), p, q, &out));
    } else if (app.got_subcommand(co)) {
      check(sg_cobordism_report(store.get(), from.c_str(), to.c_str(), euler, betti, &out));
    } else if (app.got_subcommand(er)) {
      check(sg_euler_range_report(upsilon.c_str(), q, &out));
    } else if (app.got_subcommand(im)) {
      if (store_path.empty()) throw CliError{"invalid-argument: import needs --store or SLICEGATE_STORE"};
      Json mapping = Json::object();
      for (const auto& m : maps) {
        const auto eq = m.find('=');
        if (eq == std::string::npos || eq == 0) throw CliError{"invalid-argument: --map expects field=column"};
        mapping[m.substr(0, eq)] = m.substr(eq + 1);
      }
      check(sg_store_import_csv(store.get(), csv_path.c_str(), mapping.dump().c_str(), &out));
      check(sg_store_save(store.get(), store_path.c_str()));
    } else if (app.got_subcommand(sh)) {
      char* rec = nullptr;
      check(sg_store_record_json(store.get(), knot_name->c_str(), &rec));
      Json doc;
      doc["command"] = "show";
      doc["record"] = take_json(rec);
      out = nullptr;
      if (as_json) {
        std::cout << doc.dump(2) << "\n";
      } else {
        render(doc, std::cout);
      }
      return kExitOk;
    }

    const Json doc = take_json(out);
    if (doc.contains("diagnostics")) print_diagnostics(doc["diagnostics"]);
    if (doc.contains("report")) print_diagnostics(doc["report"]["diagnostics"]);
    if (as_json) {
      std::cout << doc.dump(2) << "\n";
    } else {
      render(doc, std::cout);
    }

    bool obstructed = false;
    if (doc.contains("report")) obstructed = smoothly_obstructed(doc["report"]);
    if (doc.contains("reports")) {
      for (const auto& r : doc["reports"]) obstructed = obstructed || smoothly_obstructed(r);
    }
    return fail_on_obstruction && obstructed ? kExitObstructed : kExitOk;
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: internal: unreadable report: " << e.what() << "\n";
    return kExitError;
  }
}
