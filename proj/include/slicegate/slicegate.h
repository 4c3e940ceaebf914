/*
 * slicegate C API
 *
 * Exact knot-concordance invariants and sliceness obstructions behind a
 * plain C interface. Handles are opaque; every fallible call returns an
 * sg_status and, on failure, leaves a message retrievable with
 * sg_last_error() on the calling thread.
 *
 * Strings returned through `char** out` parameters are heap allocated by
 * the library and must be released with sg_string_free(). Rationals cross
 * the boundary as text ("3", "-1/2").
 */
#ifndef SLICEGATE_SLICEGATE_H
#define SLICEGATE_SLICEGATE_H

#include <stdint.h>

#if defined(_WIN32)
#define SG_API __declspec(dllexport)
#else
#define SG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sg_status {
  SG_OK = 0,
  SG_ERR_INVALID_ARGUMENT = 1,
  SG_ERR_PARSE = 2,
  SG_ERR_NOT_FOUND = 3,
  SG_ERR_INCONSISTENT = 4,
  SG_ERR_DOMAIN = 5,
  SG_ERR_BUDGET = 6,
  SG_ERR_HALF_TWIST = 7,
  SG_ERR_MISSING_INVARIANT = 8,
  SG_ERR_INVALID_ALEXANDER = 9,
  SG_ERR_IO = 10,
  SG_ERR_INTERNAL = 11
} sg_status;

typedef enum sg_clasp { SG_CLASP_POSITIVE = 0, SG_CLASP_NEGATIVE = 1 } sg_clasp;

typedef enum sg_oss_convention { SG_OSS_MINUS = 0, SG_OSS_PLUS = 1 } sg_oss_convention;

typedef struct sg_store sg_store;
typedef struct sg_seifert sg_seifert;

SG_API const char* sg_version(void);
SG_API const char* sg_last_error(void);
SG_API const char* sg_status_name(sg_status status);
SG_API void sg_string_free(char* s);

/* ---- knot store ------------------------------------------------------- */

/* Store holding the built-in seed records. */
SG_API sg_status sg_store_new_seeded(sg_store** out);
SG_API sg_status sg_store_new_empty(sg_store** out);
SG_API sg_status sg_store_load(const char* path, sg_store** out);
SG_API sg_status sg_store_save(const sg_store* store, const char* path);
SG_API void sg_store_free(sg_store* store);
SG_API sg_status sg_store_size(const sg_store* store, int64_t* out);

/* JSON array of record names, sorted. */
SG_API sg_status sg_store_names_json(const sg_store* store, char** out);
/* One record in the persisted JSON form; SG_ERR_NOT_FOUND for unknown names. */
SG_API sg_status sg_store_record_json(const sg_store* store, const char* name, char** out);

/*
 * Ingest a CSV table. mapping_json maps field names to column headers, e.g.
 * {"name": "Name", "seifert": "Seifert Matrix"}. Rows are merged into the
 * store; per-row diagnostics come back as a JSON document.
 */
SG_API sg_status sg_store_import_csv(sg_store* store, const char* csv_path, const char* mapping_json,
                                     char** diagnostics_json);

/* ---- Seifert matrices -------------------------------------------------- */

/* Matrix JSON: {"n": 2, "entries": [[-1, 1], [0, -1]]}. */
SG_API sg_status sg_seifert_from_json(const char* matrix_json, sg_seifert** out);
SG_API void sg_seifert_free(sg_seifert* v);
SG_API sg_status sg_seifert_signature(const sg_seifert* v, int64_t* out);
SG_API sg_status sg_seifert_arf(const sg_seifert* v, int* out);
/* |det(V + V^T)| as decimal text. */
SG_API sg_status sg_seifert_determinant(const sg_seifert* v, char** out);
/* Alexander polynomial as a [[coefficient, exponent], ...] term list. */
SG_API sg_status sg_seifert_alexander_json(const sg_seifert* v, char** out);
/* Levine-Tristram signature at exp(2 pi i * angle); *singular set to 1 when
   the form is degenerate, in which case *signature is left at 0. */
SG_API sg_status sg_seifert_levine_tristram(const sg_seifert* v, const char* angle, int* singular,
                                            int64_t* signature);

/* ---- reports (JSON documents) ----------------------------------------- */

/*
 * Classical invariants of a stored knot (name) or of a matrix given as JSON
 * (matrix_json); exactly one must be non-NULL. angles_json is an optional
 * JSON array of angle strings for Levine-Tristram signatures.
 */
SG_API sg_status sg_invariants_report(const sg_store* store, const char* name, const char* matrix_json,
                                      const char* angles_json, char** out);

/* Obstruction report for a stored knot or an ad-hoc matrix. */
SG_API sg_status sg_obstruct_report(const sg_store* store, const char* name, const char* matrix_json,
                                    sg_oss_convention oss, char** out);

/* Obstruction reports for every record, name-sorted; parallel != 0 fans
   the work out over threads. */
SG_API sg_status sg_obstruct_all_report(const sg_store* store, sg_oss_convention oss, int parallel, char** out);

/* Twisted Whitehead double of a stored companion. */
SG_API sg_status sg_whitehead_report(const sg_store* store, sg_clasp clasp, int64_t twist, int64_t framing,
                                     const char* companion, sg_oss_convention oss, char** out);

/*
 * Cable envelopes for the (p, q)-cable. upsilon_source is a stored knot
 * name or an Upsilon JSON document ({"breakpoints": ...}).
 */
SG_API sg_status sg_cable_bounds_report(const sg_store* store, const char* upsilon_source, int64_t p, int64_t q,
                                        char** out);

/* Genus-1 cobordism inequality; from/to are knot names or rationals. */
SG_API sg_status sg_cobordism_report(const sg_store* store, const char* from, const char* to, int64_t euler,
                                     int64_t betti, char** out);

/* Allowed normal Euler numbers for a genus-1 cobordism to the (2, q)-cable. */
SG_API sg_status sg_euler_range_report(const char* upsilon, int64_t q, char** out);

/* ---- primitives ------------------------------------------------------- */

SG_API sg_status sg_yasuhara(int64_t sigma, int arf, int* out);
/* Fox-Milnor test on a term-list polynomial; witness_json may be NULL. */
SG_API sg_status sg_fox_milnor(const char* poly_json, int* passes, char** witness_json);

#ifdef __cplusplus
}
#endif

#endif /* SLICEGATE_SLICEGATE_H */
