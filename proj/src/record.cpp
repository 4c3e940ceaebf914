#include "record.hpp"

#include "errors.hpp"

namespace slicegate {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Computed: return "computed";
    case Provenance::Table: return "table";
    case Provenance::Literature: return "literature";
    case Provenance::Reconstructed: return "reconstructed";
  }
  return "computed";
}

Provenance parse_provenance(const std::string& s) {
  if (s == "computed") return Provenance::Computed;
  if (s == "table") return Provenance::Table;
  if (s == "literature") return Provenance::Literature;
  if (s == "reconstructed") return Provenance::Reconstructed;
  fail(ErrorCode::Parse, "unknown provenance tag '" + s + "'");
}

void CompanionInvariants::validate() const {
  if (epsilon && (*epsilon < -1 || *epsilon > 1)) {
    fail(ErrorCode::Inconsistent, "epsilon must be -1, 0 or 1, got " + std::to_string(*epsilon));
  }
  if (s && *s % 2 != 0) fail(ErrorCode::Inconsistent, "Rasmussen s must be even, got " + std::to_string(*s));
  if (tau && nu && *nu != *tau && *nu != *tau + 1) {
    fail(ErrorCode::Inconsistent, "nu = " + std::to_string(*nu) + " must equal tau or tau + 1 (tau = " +
                                      std::to_string(*tau) + ")");
  }
  const std::pair<const char*, const std::optional<Interval>*> intervals[] = {
      {"g4", &g4}, {"gamma4", &gamma4}, {"g3", &g3}, {"gamma3", &gamma3}};
  for (const auto& [label, iv] : intervals) {
    if (!*iv) continue;
    if ((*iv)->empty() || (*iv)->lo < 0) fail(ErrorCode::Inconsistent, std::string(label) + " interval is empty");
  }
  if (gamma4 && gamma4->hi && *gamma4->hi < 1) fail(ErrorCode::Inconsistent, "gamma4 must be at least 1");
}

void KnotRecord::validate() const {
  invariants.validate();
  if (arf && *arf != 0 && *arf != 1) fail(ErrorCode::Inconsistent, name + ": arf must be 0 or 1");
  if (sigma && *sigma % 2 != 0) fail(ErrorCode::Inconsistent, name + ": signature must be even");
  if (alexander) {
    Rational one = alexander->is_zero() ? Rational(0) : alexander->evaluate(1);
    if (one != 1 && one != -1) fail(ErrorCode::Inconsistent, name + ": alexander must satisfy p(1) = +-1");
    if (arf && arf_murasugi(*alexander) != *arf) {
      fail(ErrorCode::Inconsistent, name + ": stored arf = " + std::to_string(*arf) +
                                        " disagrees with the alexander field (Murasugi gives " +
                                        std::to_string(arf_murasugi(*alexander)) + ")");
    }
  }
  if (!seifert_matrix) return;
  const SeifertMatrix& v = *seifert_matrix;
  if (sigma) {
    const int computed = signature(v);
    if (computed != *sigma) {
      fail(ErrorCode::Inconsistent, name + ": stored sigma = " + std::to_string(*sigma) +
                                        " disagrees with seifert_matrix (computed " + std::to_string(computed) + ")");
    }
  }
  if (arf && v.size() <= kMaxArfSize) {
    const int computed = slicegate::arf(v);
    if (computed != *arf) {
      fail(ErrorCode::Inconsistent, name + ": stored arf = " + std::to_string(*arf) +
                                        " disagrees with seifert_matrix (computed " + std::to_string(computed) + ")");
    }
  }
  if (alexander) {
    LaurentPoly computed = slicegate::alexander(v);
    if (!equal_up_to_unit(computed, *alexander)) {
      fail(ErrorCode::Inconsistent, name + ": stored alexander = " + alexander->to_string() +
                                        " disagrees with seifert_matrix (computed " + computed.to_string() + ")");
    }
  }
  const std::int64_t sig = signature(v);
  const std::int64_t lower = (sig < 0 ? -sig : sig) / 2;
  if (invariants.g4 && invariants.g4->hi && *invariants.g4->hi < lower) {
    fail(ErrorCode::Inconsistent, name + ": stored g4 " + invariants.g4->to_string() +
                                      " contradicts |sigma|/2 = " + std::to_string(lower));
  }
}

}  // namespace slicegate
