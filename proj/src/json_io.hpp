#pragma once

#include "obstruct.hpp"
#include "record.hpp"

#include <json.hpp>

namespace slicegate::json {

using Json = nlohmann::ordered_json;

/// Integers when they fit in 64 bits, decimal strings otherwise.
Json from_bigint(const BigInt& v);
BigInt to_bigint(const Json& j);

/// Integer, or [num, den].
Json from_rational(const Rational& r);
Rational to_rational(const Json& j);

/// Sparse term list [[coefficient, exponent], ...], exponents increasing.
Json from_poly(const LaurentPoly& p);
LaurentPoly to_poly(const Json& j);

/// {"n": 2, "entries": [[-1, 1], [0, -1]]}
Json from_matrix(const SeifertMatrix& v);
SeifertMatrix to_matrix(const Json& j);

/// {"breakpoints": [[0, 0], [1, -1], [2, 0]]}
Json from_pl(const PLFunction& f);
PLFunction to_pl(const Json& j, bool require_upsilon = true);

/// [lo, hi] with hi null when unbounded.
Json from_interval(const Interval& iv);
Interval to_interval(const Json& j);

Json from_bounds(const GenusBounds& b);

Json from_record(const KnotRecord& r);
KnotRecord to_record(const Json& j);

Json from_report(const ObstructionReport& r);

/// Parse text, mapping syntax errors to ErrorCode::Parse.
Json parse(const std::string& text);

}  // namespace slicegate::json
