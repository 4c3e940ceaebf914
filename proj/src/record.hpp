#pragma once

#include "bounds.hpp"
#include "laurent.hpp"
#include "plfunc.hpp"
#include "seifert.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace slicegate {

enum class Provenance { Computed, Table, Literature, Reconstructed };

const char* provenance_name(Provenance p);
Provenance parse_provenance(const std::string& s);

/// Concordance invariants that are supplied as data rather than computed.
struct CompanionInvariants {
  std::optional<std::int64_t> tau;
  std::optional<int> epsilon;
  std::optional<std::int64_t> nu;
  std::optional<std::int64_t> s;  // Rasmussen
  std::optional<PLFunction> upsilon;
  std::optional<Interval> g4;
  std::optional<Interval> gamma4;
  std::optional<Interval> g3;
  std::optional<Interval> gamma3;

  /// Throws Inconsistent when nu is not tau or tau + 1, or on malformed values.
  void validate() const;

  friend bool operator==(const CompanionInvariants&, const CompanionInvariants&) = default;
};

enum class Clasp { Positive, Negative };

/// Satellite parameters when a record is a twisted Whitehead double.
struct WhiteheadParams {
  Clasp clasp = Clasp::Positive;
  std::int64_t twist = 0;
  std::int64_t framing = 0;  // gluing framing relative to the Seifert framing
  std::string companion;

  std::int64_t effective_twist() const { return twist + framing; }
  /// Positive clasp with t < 0 or negative clasp with t > 0. The same test is
  /// applied to t + framing, since the matrix only sees the effective twist.
  bool half_twist() const {
    const std::int64_t b = effective_twist();
    if (clasp == Clasp::Positive) return twist < 0 || b < 0;
    return twist > 0 || b > 0;
  }

  friend bool operator==(const WhiteheadParams&, const WhiteheadParams&) = default;
};

struct KnotRecord {
  std::string name;
  std::optional<SeifertMatrix> seifert_matrix;
  std::optional<LaurentPoly> alexander;
  CompanionInvariants invariants;
  std::optional<std::int64_t> sigma;
  std::optional<int> arf;
  std::optional<WhiteheadParams> whitehead;
  /// Source tag per populated field, keyed by field name.
  std::map<std::string, Provenance> provenance;
  std::vector<std::string> diagnostics;

  /// Stored values must agree with anything computable from the matrix.
  void validate() const;

  friend bool operator==(const KnotRecord&, const KnotRecord&) = default;
};

}  // namespace slicegate
