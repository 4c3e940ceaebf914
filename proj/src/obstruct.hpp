#pragma once

#include "bounds.hpp"
#include "laurent.hpp"
#include "plfunc.hpp"
#include "record.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace slicegate {

enum class Tri { Yes, No, Unknown };
const char* tri_name(Tri t);

struct Verdict {
  Tri topologically_slice = Tri::Unknown;
  Tri smoothly_slice = Tri::Unknown;
  Tri nonorientably_slice = Tri::Unknown;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct AppliedRule {
  std::string rule;
  std::string anchor;
  std::string contribution;
  friend bool operator==(const AppliedRule&, const AppliedRule&) = default;
};

/// Invariant values the report was derived from.
struct ReportFacts {
  std::optional<std::int64_t> sigma;
  std::optional<int> arf;
  std::optional<LaurentPoly> alexander;
  std::optional<BigInt> determinant;
  std::optional<bool> fox_milnor_passes;
  std::optional<LaurentPoly> fox_milnor_witness;
  std::optional<Rational> upsilon;
  friend bool operator==(const ReportFacts&, const ReportFacts&) = default;
};

struct ObstructionReport {
  std::string name;
  GenusBounds bounds;
  Verdict verdict;
  ReportFacts facts;
  std::vector<AppliedRule> applied_rules;
  std::vector<std::string> diagnostics;
  friend bool operator==(const ObstructionReport&, const ObstructionReport&) = default;
};

struct AggregateOptions {
  OssConvention oss = OssConvention::Minus;
};

/// sigma + 4 arf = 4 (mod 8), which forces gamma4 >= 2. Sigma must be even.
bool yasuhara(std::int64_t sigma, int arf);

/// Combine every applicable rule into the tightest genus intervals and a
/// verdict. Throws Inconsistent when rules clash (naming them).
ObstructionReport aggregate(const KnotRecord& record, const AggregateOptions& options = {});

/// Same, with the direct rules applied in the given permutation of
/// [0, rule_count()). The result does not depend on the order.
ObstructionReport aggregate_in_order(const KnotRecord& record, const AggregateOptions& options,
                                     std::span<const std::size_t> order);
std::size_t rule_count();

/// K related to J by one non-oriented band move: gamma4(K) <= gamma4(J) + 1.
/// A slice J is passed as source_gamma4_hi = 0, which pins gamma4(K) = 1.
GenusBounds band_move_bound(GenusBounds target, std::int64_t source_gamma4_hi);

}  // namespace slicegate
