#include "knotdb.hpp"

#include "errors.hpp"
#include "json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace slicegate {

void KnotStore::insert(KnotRecord record) {
  if (records_.contains(record.name)) fail(ErrorCode::Inconsistent, "duplicate knot name '" + record.name + "'");
  std::string name = record.name;
  records_.emplace(std::move(name), std::move(record));
}

namespace {

template <typename T>
void merge_field(std::optional<T>& into, const std::optional<T>& from, const std::string& knot, const char* field,
                 std::map<std::string, Provenance>& prov, const std::map<std::string, Provenance>& from_prov) {
  if (!from) return;
  if (into && !(*into == *from)) {
    fail(ErrorCode::Inconsistent, knot + ": field '" + field + "' clashes with the stored value");
  }
  if (!into) {
    into = from;
    if (auto it = from_prov.find(field); it != from_prov.end()) prov[field] = it->second;
  }
}

}  // namespace

void KnotStore::merge(KnotRecord record) {
  auto it = records_.find(record.name);
  if (it == records_.end()) {
    record.validate();
    insert(std::move(record));
    return;
  }
  KnotRecord combined = it->second;
  const auto& p = record.provenance;
  auto& cp = combined.provenance;
  const std::string& n = record.name;
  merge_field(combined.seifert_matrix, record.seifert_matrix, n, "seifert_matrix", cp, p);
  if (record.alexander && combined.alexander && !equal_up_to_unit(*record.alexander, *combined.alexander)) {
    fail(ErrorCode::Inconsistent, n + ": field 'alexander' clashes with the stored value");
  }
  if (!combined.alexander && record.alexander) {
    combined.alexander = record.alexander;
    if (auto pi = p.find("alexander"); pi != p.end()) cp["alexander"] = pi->second;
  }
  merge_field(combined.sigma, record.sigma, n, "sigma", cp, p);
  merge_field(combined.arf, record.arf, n, "arf", cp, p);
  merge_field(combined.whitehead, record.whitehead, n, "whitehead", cp, p);
  auto& ci = combined.invariants;
  const auto& ri = record.invariants;
  merge_field(ci.tau, ri.tau, n, "tau", cp, p);
  merge_field(ci.epsilon, ri.epsilon, n, "epsilon", cp, p);
  merge_field(ci.nu, ri.nu, n, "nu", cp, p);
  merge_field(ci.s, ri.s, n, "s", cp, p);
  merge_field(ci.upsilon, ri.upsilon, n, "upsilon", cp, p);
  merge_field(ci.g4, ri.g4, n, "g4", cp, p);
  merge_field(ci.gamma4, ri.gamma4, n, "gamma4", cp, p);
  merge_field(ci.g3, ri.g3, n, "g3", cp, p);
  merge_field(ci.gamma3, ri.gamma3, n, "gamma3", cp, p);
  combined.validate();
  it->second = std::move(combined);
}

const KnotRecord* KnotStore::find(const std::string& name) const {
  auto it = records_.find(name);
  return it == records_.end() ? nullptr : &it->second;
}

const KnotRecord& KnotStore::lookup(const std::string& name) const {
  if (const KnotRecord* r = find(name)) return *r;
  fail(ErrorCode::NotFound, "unknown knot '" + name + "'");
}

std::vector<std::string> KnotStore::names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : records_) out.push_back(name);
  return out;
}

// ------------------------------------------------------------------ seed data

KnotStore seed_table() {
  KnotStore store;
  const PLFunction trefoil_upsilon = PLFunction::upsilon({{0, 0}, {1, -1}, {2, 0}});

  KnotRecord unknot;
  unknot.name = "unknot";
  unknot.seifert_matrix = SeifertMatrix::create({});
  unknot.invariants.tau = 0;
  unknot.invariants.epsilon = 0;
  unknot.invariants.nu = 0;
  unknot.invariants.s = 0;
  unknot.invariants.upsilon = PLFunction::zero();
  unknot.invariants.g4 = Interval::exact(0);
  unknot.invariants.g3 = Interval::exact(0);
  unknot.provenance = {{"seifert_matrix", Provenance::Table}, {"tau", Provenance::Table},
                       {"epsilon", Provenance::Table},        {"nu", Provenance::Table},
                       {"s", Provenance::Table},              {"upsilon", Provenance::Table},
                       {"g4", Provenance::Literature},             {"g3", Provenance::Literature}};
  store.insert(std::move(unknot));

  // Right-handed trefoil, sign convention sigma = -2.
  KnotRecord trefoil;
  trefoil.name = "3_1";
  trefoil.seifert_matrix = SeifertMatrix::create({{-1, 1}, {0, -1}});
  trefoil.sigma = -2;
  trefoil.invariants.tau = 1;
  trefoil.invariants.epsilon = 1;
  trefoil.invariants.nu = 1;
  trefoil.invariants.s = 2;
  trefoil.invariants.upsilon = trefoil_upsilon;
  trefoil.invariants.g4 = Interval::exact(1);
  trefoil.invariants.g3 = Interval::exact(1);
  trefoil.invariants.gamma4 = Interval::exact(1);  // T(2,3) bounds a Moebius band
  trefoil.provenance = {{"seifert_matrix", Provenance::Table}, {"sigma", Provenance::Literature},
                        {"tau", Provenance::Table},            {"epsilon", Provenance::Table},
                        {"nu", Provenance::Table},             {"s", Provenance::Table},
                        {"upsilon", Provenance::Table},        {"g4", Provenance::Table},
                        {"g3", Provenance::Table},             {"gamma4", Provenance::Literature}};
  store.insert(std::move(trefoil));

  KnotRecord figure8;
  figure8.name = "4_1";
  figure8.seifert_matrix = SeifertMatrix::create({{1, 1}, {0, -1}});
  figure8.sigma = 0;
  figure8.arf = 1;
  figure8.invariants.tau = 0;
  figure8.invariants.epsilon = 0;
  figure8.invariants.s = 0;
  figure8.invariants.upsilon = PLFunction::zero();
  figure8.invariants.g4 = Interval::exact(1);
  figure8.invariants.g3 = Interval::exact(1);
  figure8.provenance = {{"seifert_matrix", Provenance::Table}, {"sigma", Provenance::Literature},
                        {"arf", Provenance::Literature},            {"tau", Provenance::Literature},
                        {"epsilon", Provenance::Literature},        {"s", Provenance::Table},
                        {"upsilon", Provenance::Table},        {"g4", Provenance::Table},
                        {"g3", Provenance::Table}};
  store.insert(std::move(figure8));

  KnotRecord stevedore;
  stevedore.name = "6_1";
  stevedore.alexander = LaurentPoly::from_terms({{2, -1}, {-5, 0}, {2, 1}});
  stevedore.invariants.g4 = Interval::exact(0);
  stevedore.provenance = {{"alexander", Provenance::Table}, {"g4", Provenance::Table}};
  store.insert(std::move(stevedore));

  for (const auto& [_, r] : store.records()) r.validate();
  return store;
}

// ------------------------------------------------------------------------ CSV

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string cell;
  bool quoted = false;
  bool cell_started = false;
  std::size_t i = 0;
  if (text.rfind("\xEF\xBB\xBF", 0) == 0) i = 3;
  auto end_cell = [&] {
    row.push_back(std::move(cell));
    cell.clear();
    cell_started = false;
  };
  auto end_row = [&] {
    end_cell();
    const bool blank = row.size() == 1 && row[0].empty();
    if (!blank) rows.push_back(std::move(row));
    row.clear();
  };
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cell += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell += c;
      }
      continue;
    }
    if (c == '"' && !cell_started) {
      quoted = true;
      cell_started = true;
    } else if (c == ',') {
      end_cell();
    } else if (c == '\n') {
      end_row();
    } else if (c == '\r') {
      // tolerated before '\n'
    } else {
      cell += c;
      if (c != ' ' && c != '\t') cell_started = true;
    }
  }
  if (quoted) fail(ErrorCode::Parse, "unterminated quoted CSV cell");
  if (!cell.empty() || !row.empty()) end_row();
  return rows;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::int64_t parse_int_cell(const std::string& cell) {
  Rational r = parse_rational(cell);
  if (!is_integer(r)) fail(ErrorCode::Parse, "'" + cell + "' is not an integer");
  return to_int64(numerator(r));
}

const std::set<std::string>& known_fields() {
  static const std::set<std::string> fields{"name", "seifert", "alexander", "signature", "arf",    "tau",    "epsilon",
                                            "nu",   "s",       "g4",        "gamma4",    "g3",     "gamma3", "upsilon"};
  return fields;
}

/// Applies one cell; throws Error on unparseable content.
void apply_cell(KnotRecord& r, const std::string& field, const std::string& cell) {
  auto& inv = r.invariants;
  std::string key = field;
  if (field == "seifert") {
    json::Json j = json::parse(cell);
    if (j.is_array()) j = json::Json{{"entries", j}};
    r.seifert_matrix = json::to_matrix(j);
    key = "seifert_matrix";
  } else if (field == "alexander") {
    r.alexander = json::to_poly(json::parse(cell));
  } else if (field == "signature") {
    r.sigma = parse_int_cell(cell);
    key = "sigma";
  } else if (field == "arf") {
    r.arf = static_cast<int>(parse_int_cell(cell));
    if (*r.arf != 0 && *r.arf != 1) {
      r.arf.reset();
      fail(ErrorCode::Parse, "arf must be 0 or 1");
    }
  } else if (field == "tau") {
    inv.tau = parse_int_cell(cell);
  } else if (field == "epsilon") {
    inv.epsilon = static_cast<int>(parse_int_cell(cell));
    if (*inv.epsilon < -1 || *inv.epsilon > 1) {
      inv.epsilon.reset();
      fail(ErrorCode::Parse, "epsilon must be -1, 0 or 1");
    }
  } else if (field == "nu") {
    inv.nu = parse_int_cell(cell);
  } else if (field == "s") {
    inv.s = parse_int_cell(cell);
  } else if (field == "upsilon") {
    inv.upsilon = json::to_pl(json::parse(cell));
  } else {
    json::Json j = json::parse(cell);
    Interval iv = json::to_interval(j);
    if (field == "g4") inv.g4 = iv;
    if (field == "gamma4") inv.gamma4 = iv;
    if (field == "g3") inv.g3 = iv;
    if (field == "gamma3") inv.gamma3 = iv;
  }
  r.provenance[key] = Provenance::Table;
}

}  // namespace

IngestResult ingest_csv_text(const std::string& text, const ColumnMapping& mapping) {
  if (!mapping.contains("name")) fail(ErrorCode::InvalidArgument, "column mapping must include 'name'");
  for (const auto& [field, _] : mapping) {
    if (!known_fields().contains(field)) fail(ErrorCode::InvalidArgument, "unknown mapped field '" + field + "'");
  }
  auto rows = parse_csv(text);
  if (rows.empty()) fail(ErrorCode::Parse, "CSV has no header row");
  const auto& header = rows.front();
  std::map<std::string, std::size_t> column_of;
  for (const auto& [field, column] : mapping) {
    auto it = std::find_if(header.begin(), header.end(), [&](const std::string& h) { return trim(h) == column; });
    if (it == header.end()) fail(ErrorCode::Parse, "column '" + column + "' (for " + field + ") not in header");
    column_of[field] = static_cast<std::size_t>(it - header.begin());
  }

  IngestResult result;
  for (std::size_t ri = 1; ri < rows.size(); ++ri) {
    const auto& row = rows[ri];
    auto cell_of = [&](const std::string& field) {
      const std::size_t c = column_of.at(field);
      return c < row.size() ? trim(row[c]) : std::string();
    };
    KnotRecord r;
    r.name = cell_of("name");
    if (r.name.empty()) {
      result.diagnostics.push_back({ri, mapping.at("name"), "row has no name; skipped"});
      continue;
    }
    for (const auto& [field, column] : mapping) {
      if (field == "name") continue;
      const std::string cell = cell_of(field);
      if (cell.empty()) continue;
      try {
        apply_cell(r, field, cell);
      } catch (const Error& e) {
        result.diagnostics.push_back({ri, column, e.what()});
      } catch (const nlohmann::json::exception& e) {
        result.diagnostics.push_back({ri, column, e.what()});
      }
    }
    try {
      r.validate();
    } catch (const Error& e) {
      fail(ErrorCode::Inconsistent, "row " + std::to_string(ri) + ": " + e.what());
    }
    result.delta.insert(std::move(r));
  }
  return result;
}

IngestResult ingest_csv(const std::filesystem::path& path, const ColumnMapping& mapping) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ingest_csv_text(ss.str(), mapping);
}

// ----------------------------------------------------------------- persistence

std::string store_to_json(const KnotStore& store) {
  json::Json doc;
  doc["format_version"] = kStoreFormatVersion;
  json::Json records = json::Json::array();
  for (const auto& [_, r] : store.records()) records.push_back(json::from_record(r));
  doc["records"] = records;
  return doc.dump(2) + "\n";
}

KnotStore store_from_json(const std::string& text) {
  json::Json doc = json::parse(text);
  if (!doc.is_object() || !doc.contains("format_version")) fail(ErrorCode::Parse, "store lacks format_version");
  if (doc["format_version"] != kStoreFormatVersion) {
    fail(ErrorCode::Parse, "unsupported store format_version " + doc["format_version"].dump());
  }
  KnotStore store;
  if (!doc.contains("records")) return store;
  if (!doc["records"].is_array()) fail(ErrorCode::Parse, "'records' must be a list");
  for (const auto& j : doc["records"]) {
    KnotRecord r = json::to_record(j);
    r.validate();
    store.insert(std::move(r));
  }
  return store;
}

void save(const KnotStore& store, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::Io, "cannot write " + path.string());
  out << store_to_json(store);
  if (!out) fail(ErrorCode::Io, "write failed for " + path.string());
}

KnotStore load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return store_from_json(ss.str());
}

}  // namespace slicegate
