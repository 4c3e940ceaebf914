#include "whitehead.hpp"

#include "errors.hpp"

namespace slicegate::whitehead {

void check_params(const WhiteheadParams& p) {
  if (p.twist > kMaxTwist || p.twist < -kMaxTwist || p.framing > kMaxTwist || p.framing < -kMaxTwist) {
    fail(ErrorCode::InvalidArgument, "twist and framing must lie within +-" + std::to_string(kMaxTwist));
  }
}

namespace {

void require_full_twist(const WhiteheadParams& p) {
  check_params(p);
  if (p.half_twist()) {
    fail(ErrorCode::HalfTwist, double_name(p) + " is in the half-twist regime; matrix-based conclusions are withheld");
  }
}

const CompanionInvariants& require_tau(const CompanionInvariants& c) {
  if (!c.tau) fail(ErrorCode::MissingInvariant, "companion tau is required");
  return c;
}

}  // namespace

std::string double_name(const WhiteheadParams& p) {
  std::string name = std::string("Wh") + (p.clasp == Clasp::Positive ? "+" : "-") + "_" + std::to_string(p.twist);
  if (p.framing != 0) name += "[framing " + std::to_string(p.framing) + "]";
  return name + "(" + (p.companion.empty() ? std::string("K") : p.companion) + ")";
}

SeifertMatrix pattern_matrix(Clasp clasp, std::int64_t b) {
  const std::int64_t corner = clasp == Clasp::Positive ? -1 : 1;
  return SeifertMatrix::create({{corner, 1}, {0, b}});
}

SeifertMatrix seifert_matrix(const WhiteheadParams& p) {
  require_full_twist(p);
  return pattern_matrix(p.clasp, p.effective_twist());
}

LaurentPoly alexander_formula(const WhiteheadParams& p) {
  check_params(p);
  const BigInt b = p.clasp == Clasp::Positive ? BigInt(p.effective_twist()) : BigInt(-p.effective_twist());
  return LaurentPoly::from_terms({{-b, 1}, {2 * b + 1, 0}, {-b, -1}});
}

int sigma_whitehead(const WhiteheadParams& p) {
  require_full_twist(p);
  return 0;
}

int arf_whitehead(const WhiteheadParams& p) {
  require_full_twist(p);
  return p.effective_twist() % 2 == 0 ? 0 : 1;
}

Derived tau_whitehead(const WhiteheadParams& p, const CompanionInvariants& c) {
  check_params(p);
  const std::int64_t tau = *require_tau(c).tau;
  const std::int64_t b = p.effective_twist();
  if (p.clasp == Clasp::Positive) return {b >= 2 * tau ? 0 : 1, Provenance::Literature};
  // Wh-_t(K) is the mirror of Wh+_{-t}(mirror K); tau negates under mirroring.
  return {b <= 2 * tau ? 0 : -1, Provenance::Reconstructed};
}

Derived epsilon_whitehead(const WhiteheadParams& p, const CompanionInvariants& c) {
  check_params(p);
  if (!c.tau || !c.epsilon) fail(ErrorCode::MissingInvariant, "companion tau and epsilon are required");
  const bool trivial = *c.tau == 0 && *c.epsilon == 0;
  if (p.clasp == Clasp::Positive) return {trivial ? 0 : 1, Provenance::Literature};
  // Mirror identity as for tau; the vanishing condition is mirror-symmetric.
  return {trivial ? 0 : -1, Provenance::Reconstructed};
}

PLFunction upsilon_whitehead(const WhiteheadParams& p, const CompanionInvariants& c) {
  check_params(p);
  const std::int64_t tau = *require_tau(c).tau;
  const std::int64_t b = p.effective_twist();
  if (p.clasp == Clasp::Positive) {
    if (b >= 2 * tau) return PLFunction::zero();
    return PLFunction::upsilon({{0, 0}, {1, -1}, {2, 0}});
  }
  if (b <= 2 * tau) return PLFunction::zero();
  return PLFunction::upsilon({{0, 0}, {1, 1}, {2, 0}});
}

bool gamma4_obstructed(const WhiteheadParams& p) {
  check_params(p);
  return !p.half_twist() && p.effective_twist() % 2 != 0;
}

GenusBounds gamma4_whitehead(const WhiteheadParams& p) {
  GenusBounds b;
  if (p.half_twist()) return b;
  const std::int64_t lo = gamma4_obstructed(p) ? 2 : 1;
  b.gamma4 = {lo, 2};
  b.gamma3 = Interval{lo, 2};
  return b;
}

std::int64_t cable_target(const WhiteheadParams& p) {
  check_params(p);
  const std::int64_t b = p.effective_twist();
  return p.clasp == Clasp::Positive ? 2 * b + 1 : 2 * b - 1;
}

KnotRecord make_record(const WhiteheadParams& p, const KnotRecord& companion) {
  check_params(p);
  WhiteheadParams params = p;
  params.companion = companion.name;

  KnotRecord r;
  r.name = double_name(params);
  r.whitehead = params;
  r.provenance["whitehead"] = Provenance::Computed;

  if (params.half_twist()) {
    r.diagnostics.push_back("half-twist regime (" + std::string(params.clasp == Clasp::Positive ? "positive" : "negative") +
                            " clasp, twist " + std::to_string(params.twist) + ", effective twist " +
                            std::to_string(params.effective_twist()) +
                            "): Seifert matrix, signature, Arf and gamma4 conclusions withheld");
  } else {
    r.seifert_matrix = seifert_matrix(params);
    r.alexander = alexander(*r.seifert_matrix);
    r.sigma = signature(*r.seifert_matrix);
    r.arf = arf(*r.seifert_matrix);
    for (const char* field : {"seifert_matrix", "alexander", "sigma", "arf"}) r.provenance[field] = Provenance::Computed;
  }

  const CompanionInvariants& c = companion.invariants;
  if (c.tau) {
    Derived tau = tau_whitehead(params, c);
    r.invariants.tau = tau.value;
    r.provenance["tau"] = tau.provenance;
    r.invariants.upsilon = upsilon_whitehead(params, c);
    r.provenance["upsilon"] = Provenance::Literature;
    if (tau.provenance == Provenance::Reconstructed) {
      r.diagnostics.push_back("tau of a negative-clasp double derived via the mirror identity");
    }
    if (c.epsilon) {
      Derived eps = epsilon_whitehead(params, c);
      r.invariants.epsilon = eps.value;
      r.provenance["epsilon"] = eps.provenance;
      if (eps.provenance == Provenance::Reconstructed) {
        r.diagnostics.push_back("epsilon of a negative-clasp double derived via the mirror identity");
      }
    }
  } else {
    r.diagnostics.push_back("companion " + companion.name + " has no tau; Floer-theoretic formulas skipped");
  }
  return r;
}

}  // namespace slicegate::whitehead
