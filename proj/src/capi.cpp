#include "slicegate/slicegate.h"

#include "errors.hpp"
#include "knotdb.hpp"
#include "reports.hpp"
#include "seifert.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct sg_store {
  slicegate::KnotStore store;
};

struct sg_seifert {
  slicegate::SeifertMatrix v;
};

namespace {

using slicegate::ErrorCode;
using slicegate::json::Json;

thread_local std::string g_last_error;

sg_status to_status(ErrorCode code) { return static_cast<sg_status>(static_cast<int>(code)); }

sg_status set_error(sg_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <class F>
sg_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return SG_OK;
  } catch (const slicegate::Error& e) {
    return set_error(to_status(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return set_error(SG_ERR_PARSE, std::string("malformed JSON: ") + e.what());
  } catch (const std::bad_alloc&) {
    return set_error(SG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(SG_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(SG_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* what) {
  if (!p) slicegate::fail(ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const Json& doc, char** out) { *out = dup_string(doc.dump()); }

slicegate::AggregateOptions options(sg_oss_convention oss) {
  slicegate::AggregateOptions o;
  o.oss = oss == SG_OSS_PLUS ? slicegate::OssConvention::Plus : slicegate::OssConvention::Minus;
  return o;
}

slicegate::reports::KnotRef knot_ref(const char* name, const char* matrix_json) {
  slicegate::reports::KnotRef ref;
  if (name) ref.name = name;
  if (matrix_json) ref.matrix = slicegate::json::to_matrix(slicegate::json::parse(matrix_json));
  return ref;
}

}  // namespace

extern "C" {

const char* sg_version(void) { return "0.1.0"; }

const char* sg_last_error(void) { return g_last_error.c_str(); }

const char* sg_status_name(sg_status status) {
  if (status == SG_OK) return "ok";
  if (status < SG_ERR_INVALID_ARGUMENT || status > SG_ERR_INTERNAL) return "unknown";
  return slicegate::error_code_name(static_cast<ErrorCode>(status));
}

void sg_string_free(char* s) { std::free(s); }

sg_status sg_store_new_seeded(sg_store** out) {
  return guarded([&] {
    require(out, "out");
    *out = new sg_store{slicegate::seed_table()};
  });
}

sg_status sg_store_new_empty(sg_store** out) {
  return guarded([&] {
    require(out, "out");
    *out = new sg_store{};
  });
}

sg_status sg_store_load(const char* path, sg_store** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new sg_store{slicegate::load(path)};
  });
}

sg_status sg_store_save(const sg_store* store, const char* path) {
  return guarded([&] {
    require(store, "store");
    require(path, "path");
    slicegate::save(store->store, path);
  });
}

void sg_store_free(sg_store* store) { delete store; }

sg_status sg_store_size(const sg_store* store, int64_t* out) {
  return guarded([&] {
    require(store, "store");
    require(out, "out");
    *out = static_cast<int64_t>(store->store.size());
  });
}

sg_status sg_store_names_json(const sg_store* store, char** out) {
  return guarded([&] {
    require(store, "store");
    require(out, "out");
    emit(Json(store->store.names()), out);
  });
}

sg_status sg_store_record_json(const sg_store* store, const char* name, char** out) {
  return guarded([&] {
    require(store, "store");
    require(name, "name");
    require(out, "out");
    emit(slicegate::json::from_record(store->store.lookup(name)), out);
  });
}

sg_status sg_store_import_csv(sg_store* store, const char* csv_path, const char* mapping_json,
                              char** diagnostics_json) {
  return guarded([&] {
    require(store, "store");
    require(csv_path, "csv_path");
    require(mapping_json, "mapping_json");
    const Json m = slicegate::json::parse(mapping_json);
    if (!m.is_object()) slicegate::fail(ErrorCode::Parse, "column mapping must be a JSON object");
    slicegate::ColumnMapping mapping;
    for (const auto& [field, column] : m.items()) {
      if (!column.is_string()) slicegate::fail(ErrorCode::Parse, "column mapping values must be strings");
      mapping[field] = column.get<std::string>();
    }
    slicegate::IngestResult result = slicegate::ingest_csv(csv_path, mapping);
    slicegate::KnotStore merged = store->store;
    for (const auto& [name, r] : result.delta.records()) merged.merge(r);
    store->store = std::move(merged);
    if (diagnostics_json) emit(slicegate::reports::import_result(result.delta, result.diagnostics), diagnostics_json);
  });
}

sg_status sg_seifert_from_json(const char* matrix_json, sg_seifert** out) {
  return guarded([&] {
    require(matrix_json, "matrix_json");
    require(out, "out");
    *out = new sg_seifert{slicegate::json::to_matrix(slicegate::json::parse(matrix_json))};
  });
}

void sg_seifert_free(sg_seifert* v) { delete v; }

sg_status sg_seifert_signature(const sg_seifert* v, int64_t* out) {
  return guarded([&] {
    require(v, "matrix");
    require(out, "out");
    *out = slicegate::signature(v->v);
  });
}

sg_status sg_seifert_arf(const sg_seifert* v, int* out) {
  return guarded([&] {
    require(v, "matrix");
    require(out, "out");
    *out = slicegate::arf(v->v);
  });
}

sg_status sg_seifert_determinant(const sg_seifert* v, char** out) {
  return guarded([&] {
    require(v, "matrix");
    require(out, "out");
    *out = dup_string(slicegate::determinant(v->v).str());
  });
}

sg_status sg_seifert_alexander_json(const sg_seifert* v, char** out) {
  return guarded([&] {
    require(v, "matrix");
    require(out, "out");
    emit(slicegate::json::from_poly(slicegate::alexander(v->v)), out);
  });
}

sg_status sg_seifert_levine_tristram(const sg_seifert* v, const char* angle, int* singular, int64_t* signature) {
  return guarded([&] {
    require(v, "matrix");
    require(angle, "angle");
    require(singular, "singular");
    require(signature, "signature");
    const slicegate::LevineTristram r = slicegate::levine_tristram(v->v, slicegate::parse_rational(angle));
    *singular = r.singular ? 1 : 0;
    *signature = r.singular ? 0 : r.signature;
  });
}

sg_status sg_invariants_report(const sg_store* store, const char* name, const char* matrix_json,
                               const char* angles_json, char** out) {
  return guarded([&] {
    require(store, "store");
    require(out, "out");
    std::vector<slicegate::Rational> angles;
    if (angles_json) {
      const Json a = slicegate::json::parse(angles_json);
      if (!a.is_array()) slicegate::fail(ErrorCode::Parse, "angles must be a JSON array");
      for (const auto& x : a) angles.push_back(slicegate::json::to_rational(x));
    }
    emit(slicegate::reports::invariants(store->store, knot_ref(name, matrix_json), angles), out);
  });
}

sg_status sg_obstruct_report(const sg_store* store, const char* name, const char* matrix_json,
                             sg_oss_convention oss, char** out) {
  return guarded([&] {
    require(store, "store");
    require(out, "out");
    emit(slicegate::reports::obstruct(store->store, knot_ref(name, matrix_json), options(oss)), out);
  });
}

sg_status sg_obstruct_all_report(const sg_store* store, sg_oss_convention oss, int parallel, char** out) {
  return guarded([&] {
    require(store, "store");
    require(out, "out");
    emit(slicegate::reports::obstruct_all(store->store, options(oss), parallel != 0), out);
  });
}

sg_status sg_whitehead_report(const sg_store* store, sg_clasp clasp, int64_t twist, int64_t framing,
                              const char* companion, sg_oss_convention oss, char** out) {
  return guarded([&] {
    require(store, "store");
    require(companion, "companion");
    require(out, "out");
    if (clasp != SG_CLASP_POSITIVE && clasp != SG_CLASP_NEGATIVE) {
      slicegate::fail(ErrorCode::InvalidArgument, "unknown clasp");
    }
    slicegate::WhiteheadParams p;
    p.clasp = clasp == SG_CLASP_POSITIVE ? slicegate::Clasp::Positive : slicegate::Clasp::Negative;
    p.twist = twist;
    p.framing = framing;
    p.companion = companion;
    emit(slicegate::reports::whitehead(store->store, p, options(oss)), out);
  });
}

sg_status sg_cable_bounds_report(const sg_store* store, const char* upsilon_source, int64_t p, int64_t q,
                                 char** out) {
  return guarded([&] {
    require(store, "store");
    require(upsilon_source, "upsilon_source");
    require(out, "out");
    emit(slicegate::reports::cable_bounds(store->store, upsilon_source, p, q), out);
  });
}

sg_status sg_cobordism_report(const sg_store* store, const char* from, const char* to, int64_t euler,
                              int64_t betti, char** out) {
  return guarded([&] {
    require(store, "store");
    require(from, "from");
    require(to, "to");
    require(out, "out");
    emit(slicegate::reports::cobordism(store->store, from, to, euler, betti), out);
  });
}

sg_status sg_euler_range_report(const char* upsilon, int64_t q, char** out) {
  return guarded([&] {
    require(upsilon, "upsilon");
    require(out, "out");
    emit(slicegate::reports::euler_range(slicegate::parse_rational(upsilon), q), out);
  });
}

sg_status sg_yasuhara(int64_t sigma, int arf, int* out) {
  return guarded([&] {
    require(out, "out");
    *out = slicegate::yasuhara(sigma, arf) ? 1 : 0;
  });
}

sg_status sg_fox_milnor(const char* poly_json, int* passes, char** witness_json) {
  return guarded([&] {
    require(poly_json, "poly_json");
    require(passes, "passes");
    const slicegate::FoxMilnorResult r = slicegate::fox_milnor(slicegate::json::to_poly(slicegate::json::parse(poly_json)));
    *passes = r.passes ? 1 : 0;
    if (witness_json) *witness_json = r.witness ? dup_string(slicegate::json::from_poly(*r.witness).dump()) : nullptr;
  });
}

}  // extern "C"
