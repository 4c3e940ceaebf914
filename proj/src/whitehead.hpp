#pragma once

#include "bounds.hpp"
#include "laurent.hpp"
#include "plfunc.hpp"
#include "record.hpp"
#include "seifert.hpp"

#include <cstdint>

namespace slicegate::whitehead {

/// Largest |twist| or |framing| accepted.
inline constexpr std::int64_t kMaxTwist = 1'000'000'000'000;

/// Throws InvalidArgument when twist or framing are out of range.
void check_params(const WhiteheadParams& p);

/// [[-1, 1], [0, b]] for a positive clasp, [[1, 1], [0, b]] for a negative
/// one, for any b.
SeifertMatrix pattern_matrix(Clasp clasp, std::int64_t b);

/// pattern_matrix with b = t + framing. Throws HalfTwist in the half-twist regime.
SeifertMatrix seifert_matrix(const WhiteheadParams& p);

/// -b t + (2b + 1) - b t^-1 with b the effective twist (positive clasp), or
/// with b replaced by -b (negative clasp, via the mirror identity).
LaurentPoly alexander_formula(const WhiteheadParams& p);

int sigma_whitehead(const WhiteheadParams& p);
int arf_whitehead(const WhiteheadParams& p);

/// A value together with how it was obtained: negative-clasp tau and
/// epsilon come from the mirror identity and are tagged Reconstructed.
struct Derived {
  int value = 0;
  Provenance provenance = Provenance::Literature;
};

Derived tau_whitehead(const WhiteheadParams& p, const CompanionInvariants& c);
Derived epsilon_whitehead(const WhiteheadParams& p, const CompanionInvariants& c);
PLFunction upsilon_whitehead(const WhiteheadParams& p, const CompanionInvariants& c);

/// True when the Yasuhara obstruction is available for this double: outside
/// the half-twist regime with odd effective twist.
bool gamma4_obstructed(const WhiteheadParams& p);

/// gamma3 <= 2 and gamma4 <= 2 always, gamma4 = 2 when obstructed. In the
/// half-twist regime nothing beyond the defaults is claimed.
GenusBounds gamma4_whitehead(const WhiteheadParams& p);

/// Odd q of the (2, q)-cable reached by the clasp band move:
/// 2b + 1 (positive clasp) or 2b - 1 (negative clasp). Reconstructed.
std::int64_t cable_target(const WhiteheadParams& p);

/// Assemble a record for the double from its companion's record.
KnotRecord make_record(const WhiteheadParams& p, const KnotRecord& companion);

std::string double_name(const WhiteheadParams& p);

}  // namespace slicegate::whitehead
