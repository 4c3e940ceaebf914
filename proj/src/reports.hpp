#pragma once

#include "json_io.hpp"
#include "knotdb.hpp"
#include "obstruct.hpp"

#include <optional>
#include <string>
#include <vector>

namespace slicegate::reports {

using json::Json;

/// A knot given either by store name or as an ad-hoc Seifert matrix.
struct KnotRef {
  std::optional<std::string> name;
  std::optional<SeifertMatrix> matrix;
};

KnotRecord resolve(const KnotStore& store, const KnotRef& ref);

Json invariants(const KnotStore& store, const KnotRef& ref, const std::vector<Rational>& angles);
Json obstruct(const KnotStore& store, const KnotRef& ref, const AggregateOptions& options);
Json obstruct_all(const KnotStore& store, const AggregateOptions& options, bool parallel);
Json whitehead(const KnotStore& store, const WhiteheadParams& params, const AggregateOptions& options);

/// `source` is a store name or an Upsilon JSON document.
Json cable_bounds(const KnotStore& store, const std::string& source, std::int64_t p, std::int64_t q);

/// `from` / `to` are store names (upsilon read off Upsilon(1)) or rationals.
Json cobordism(const KnotStore& store, const std::string& from, const std::string& to, std::int64_t euler,
               std::int64_t betti);

Json euler_range(const Rational& upsilon, std::int64_t q);
Json import_result(const KnotStore& delta, const std::vector<RowDiagnostic>& diagnostics);

}  // namespace slicegate::reports
