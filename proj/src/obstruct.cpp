#include "obstruct.hpp"

#include "errors.hpp"
#include "seifert.hpp"
#include "whitehead.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

namespace slicegate {

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Unknown: return "unknown";
  }
  return "unknown";
}

bool yasuhara(std::int64_t sigma, int arf) {
  if (sigma % 2 != 0) fail(ErrorCode::InvalidArgument, "signature must be even, got " + std::to_string(sigma));
  if (arf != 0 && arf != 1) fail(ErrorCode::InvalidArgument, "arf must be 0 or 1");
  std::int64_t r = (sigma + 4 * arf) % 8;
  if (r < 0) r += 8;
  return r == 4;
}

GenusBounds band_move_bound(GenusBounds target, std::int64_t source_gamma4_hi) {
  if (source_gamma4_hi < 0) fail(ErrorCode::InvalidArgument, "source gamma4 bound must be nonnegative");
  target.gamma4 = target.gamma4.intersect(Interval{1, source_gamma4_hi + 1});
  return target;
}

namespace {

enum class Qty { G4 = 0, Gamma4, G3, Gamma3 };
constexpr std::array<const char*, 4> kQtyNames{"g4", "gamma4", "g3", "gamma3"};

struct Contribution {
  std::size_t rule;
  Qty qty;
  bool is_lo;
  std::int64_t value;
  std::string text;
};

struct Note {
  std::size_t rule;
  std::string text;
};

struct Facts {
  const KnotRecord& record;
  std::optional<std::int64_t> sigma;
  std::optional<int> arf;
  std::optional<LaurentPoly> alexander;
  std::optional<FoxMilnorResult> fox_milnor;
  std::optional<Rational> upsilon;
  std::vector<std::string> diagnostics;
};

struct Sink {
  std::vector<Contribution> contributions;
  std::vector<Note> notes;
  bool topologically_no = false;
  bool topologically_yes = false;

  void lo(std::size_t rule, Qty q, std::int64_t v, std::string text) {
    contributions.push_back({rule, q, true, v, std::move(text)});
  }
  void hi(std::size_t rule, Qty q, std::int64_t v, std::string text) {
    contributions.push_back({rule, q, false, v, std::move(text)});
  }
  void note(std::size_t rule, std::string text) { notes.push_back({rule, std::move(text)}); }
};

using RuleFn = std::function<void(std::size_t, const Facts&, const AggregateOptions&, Sink&)>;

struct RuleSpec {
  const char* name;
  const char* anchor;
  RuleFn apply;
};

std::int64_t iabs(std::int64_t v) { return v < 0 ? -v : v; }

std::string ge(Qty q, std::int64_t v) { return std::string(kQtyNames[static_cast<int>(q)]) + " >= " + std::to_string(v); }
std::string le(Qty q, std::int64_t v) { return std::string(kQtyNames[static_cast<int>(q)]) + " <= " + std::to_string(v); }

// Direct rules: each reads facts and emits bounds. Closure rules follow.
const std::vector<RuleSpec>& direct_rules() {
  static const std::vector<RuleSpec> rules = {
      {"definition", "g4 >= 0; gamma4 >= 1 (first Betti number of a non-orientable surface)",
       [](std::size_t id, const Facts&, const AggregateOptions&, Sink& s) {
         s.lo(id, Qty::G4, 0, ge(Qty::G4, 0));
         s.lo(id, Qty::Gamma4, 1, ge(Qty::Gamma4, 1));
       }},
      {"Seifert surface genus", "g4(K) <= g3(K) <= genus of a Seifert surface",
       [](std::size_t id, const Facts& f, const AggregateOptions&, Sink& s) {
         if (!f.record.seifert_matrix) return;
         const std::int64_t g = f.record.seifert_matrix->genus();
         s.hi(id, Qty::G4, g, le(Qty::G4, g) + " (Seifert matrix of size " + std::to_string(2 * g) + ")");
         s.hi(id, Qty::G3, g, le(Qty::G3, g));
       }},
      {"signature bound", "Murasugi: |sigma(K)|/2 <= g4(K)",
       [](std::size_t id, const Facts& f, const AggregateOptions&, Sink& s) {
         if (!f.sigma) return;
         const std::int64_t v = iabs(*f.sigma) / 2;
         s.lo(id, Qty::G4, v, ge(Qty::G4, v) + " (sigma = " + std::to_string(*f.sigma) + ")");
       }},
      {"Arf invariant", "slice knots have arf(K) = 0",
       [](std::size_t id, const Facts& f, const AggregateOptions&, Sink& s) {
         if (!f.arf) return;
         if (*f.arf == 1) {
           s.lo(id, Qty::G4, 1, ge(Qty::G4, 1) + " (arf = 1)");
         } else {
           s.note(id, "arf = 0: no obstruction");
         }
       }},
      {"Fox-Milnor", "Fox-Milnor: slice => Delta(t) = f(t) f(t^-1)",
       [](std::size_t id, const Facts& f, const AggregateOptions&, Sink& s) {
         if (!f.fox_milnor) return;
         if (f.fox_milnor->passes) {
           s.note(id, "passes: " + f.fox_milnor->reason);
         } else {
           s.topologically_no = true;
           s.lo(id, Qty::G4, 1, "fails: " + f.fox_milnor->reason + "; not topologically slice, " + ge(Qty::G4, 1));
         }
       }},
      {"Freedman", "Freedman: Delta(t) = 1 => topologically slice",
       [](std::size_t id, const Facts& f, const AggregateOptions&, Sink& s) {
         if (!f.alexander || !equal_up_to_unit(*f.alexander, LaurentPoly::constant(1))) return;
         s.topologically_yes = true;
         s.note(id, "Delta = 1: topologically slice");
       }},
      {"tau bound", "Ozsvath-Szabo Cor. 1.3: |tau(K)| <= g4(K)",
       [](std::size_t id, const Facts& f, const AggregateOptions&, Sink& s) {
         const auto& tau = f.record.invariants.tau;
         if (!tau) return;
         s.lo(id, Qty::G4, iabs(*tau), ge(Qty::G4, iabs(*tau)) + " (tau = " + std::to_string(*tau) + ")");
       }},
      {"epsilon", "Hom Prop. 3.6: slice => epsilon(K) = 0",
       [](std::size_t id, const Facts& f, const AggregateOptions&, Sink& s) {
         const auto& eps = f.record.invariants.epsilon;
         if (!eps) return;
         if (*eps != 0) {
           s.lo(id, Qty::G4, 1, ge(Qty::G4, 1) + " (epsilon = " + std::to_string(*eps) + ")");
         } else {
           s.note(id, "epsilon = 0: no obstruction");
         }
       }},
      {"nu bound", "Rasmussen: nu+(K) = nu-(K) <= g4(K)",
       [](std::size_t id, const Facts& f, const AggregateOptions&, Sink& s) {
         const auto& nu = f.record.invariants.nu;
         if (!nu) return;
         const std::int64_t v = std::max<std::int64_t>(*nu, 0);
         s.lo(id, Qty::G4, v, ge(Qty::G4, v) + " (nu = " + std::to_string(*nu) + ")");
       }},
      {"s bound", "Rasmussen: |s(K)|/2 <= g4(K)",
       [](std::size_t id, const Facts& f, const AggregateOptions&, Sink& s) {
         const auto& sv = f.record.invariants.s;
         if (!sv) return;
         s.lo(id, Qty::G4, iabs(*sv) / 2, ge(Qty::G4, iabs(*sv) / 2) + " (s = " + std::to_string(*sv) + ")");
       }},
      {"Upsilon bound", "Ozsvath-Stipsicz-Szabo: |Upsilon_K(t)| <= t g4(K) for 0 <= t <= 1",
       [](std::size_t id, const Facts& f, const AggregateOptions&, Sink& s) {
         const auto& ups = f.record.invariants.upsilon;
         if (!ups) return;
         const std::int64_t v = g4_lower_bound(*ups);
         s.lo(id, Qty::G4, v, ge(Qty::G4, v) + " (upsilon = " + to_string(upsilon_little(*ups)) + ")");
       }},
      {"table", "stored interval data",
       [](std::size_t id, const Facts& f, const AggregateOptions&, Sink& s) {
         const auto& inv = f.record.invariants;
         const std::pair<Qty, const std::optional<Interval>*> stored[] = {
             {Qty::G4, &inv.g4}, {Qty::Gamma4, &inv.gamma4}, {Qty::G3, &inv.g3}, {Qty::Gamma3, &inv.gamma3}};
         for (const auto& [q, iv] : stored) {
           if (!*iv) continue;
           s.lo(id, q, (*iv)->lo, ge(q, (*iv)->lo));
           if ((*iv)->hi) s.hi(id, q, *(*iv)->hi, le(q, *(*iv)->hi));
         }
       }},
      {"Yasuhara Prop 5.1", "Yasuhara Prop. 5.1: sigma(K) + 4 arf(K) = 4 (mod 8) => gamma4(K) >= 2",
       [](std::size_t id, const Facts& f, const AggregateOptions&, Sink& s) {
         if (!f.sigma || !f.arf) return;
         const std::string inputs = "sigma = " + std::to_string(*f.sigma) + ", arf = " + std::to_string(*f.arf);
         if (yasuhara(*f.sigma, *f.arf)) {
           s.lo(id, Qty::Gamma4, 2, ge(Qty::Gamma4, 2) + " (" + inputs + ")");
         } else {
           s.note(id, "does not fire (" + inputs + ")");
         }
       }},
      {"OSS non-orientable bound", "Ozsvath-Stipsicz-Szabo Thm. 1.2: |upsilon(K) + sigma(K)/2| <= gamma4(K)",
       [](std::size_t id, const Facts& f, const AggregateOptions& opt, Sink& s) {
         if (!f.upsilon || !f.sigma) return;
         const Rational bound = oss_gamma4_lower_bound(*f.upsilon, *f.sigma, opt.oss);
         const std::int64_t v = to_int64(ceil_div(bound));
         const char* form = opt.oss == OssConvention::Plus ? "|upsilon + sigma/2|" : "|upsilon - sigma/2|";
         s.lo(id, Qty::Gamma4, v, ge(Qty::Gamma4, v) + " (" + form + " = " + to_string(bound) + ")");
       }},
      {"Whitehead band move", "clasp band move to a (2,q)-cable with gamma4 = 1; Jabuka-Kelly Prop. 2.4",
       [](std::size_t id, const Facts& f, const AggregateOptions&, Sink& s) {
         const auto& wh = f.record.whitehead;
         if (!wh || wh->half_twist()) return;
         s.hi(id, Qty::Gamma4, 2,
              le(Qty::Gamma4, 2) + " (one band move to the (2," + std::to_string(whitehead::cable_target(*wh)) +
                  ")-cable of " + wh->companion + ")");
       }},
      {"Whitehead crosscap", "checkerboard surface: punctured Klein bottle bounded by the double",
       [](std::size_t id, const Facts& f, const AggregateOptions&, Sink& s) {
         const auto& wh = f.record.whitehead;
         if (!wh || wh->half_twist()) return;
         s.hi(id, Qty::Gamma3, 2, le(Qty::Gamma3, 2));
       }},
  };
  return rules;
}

struct ClosureRule {
  const char* name;
  const char* anchor;
};

constexpr std::array<ClosureRule, 5> kClosureRules{{
    {"orientable genus bound", "gamma4(K) <= 2 g4(K) + 1"},
    {"crosscap bound", "gamma4(K) <= gamma3(K)"},
    {"g4 <= g3", "g4(K) <= g3(K)"},
    {"g3 >= g4", "g4(K) <= g3(K)"},
    {"gamma3 >= gamma4", "gamma4(K) <= gamma3(K)"},
}};

struct Folded {
  std::array<Interval, 4> iv;
  std::array<bool, 4> present{true, true, false, false};
};

Folded fold(const std::vector<Contribution>& cs) {
  Folded f;
  f.iv[0] = Interval{0, std::nullopt};
  f.iv[1] = Interval{1, std::nullopt};
  for (const auto& c : cs) {
    const int q = static_cast<int>(c.qty);
    f.present[static_cast<std::size_t>(q)] = true;
    Interval& iv = f.iv[static_cast<std::size_t>(q)];
    if (c.is_lo) {
      iv.lo = std::max(iv.lo, c.value);
    } else {
      iv.hi = iv.hi ? std::min(*iv.hi, c.value) : c.value;
    }
  }
  return f;
}

/// Adds closure contributions until the intervals stop moving.
void close(std::vector<Contribution>& cs) {
  const std::size_t base = direct_rules().size();
  for (int guard = 0; guard < 64; ++guard) {
    Folded f = fold(cs);
    auto& g4 = f.iv[0];
    auto& gamma4 = f.iv[1];
    auto& g3 = f.iv[2];
    auto& gamma3 = f.iv[3];
    std::array<bool, 4> has_lo{};
    for (const auto& c : cs) {
      if (c.is_lo) has_lo[static_cast<std::size_t>(c.qty)] = true;
    }
    std::vector<Contribution> extra;
    auto tighten_hi = [&](std::size_t rule, Qty q, const Interval& cur, std::int64_t v, const std::string& why) {
      if (!cur.hi || v < *cur.hi) extra.push_back({base + rule, q, false, v, le(q, v) + " (" + why + ")"});
    };
    auto tighten_lo = [&](std::size_t rule, Qty q, const Interval& cur, std::int64_t v, const std::string& why) {
      // An optional quantity also needs a rule behind its default lower bound.
      if (v > cur.lo || !has_lo[static_cast<std::size_t>(q)]) extra.push_back({base + rule, q, true, v, ge(q, v) + " (" + why + ")"});
    };
    if (g4.hi) tighten_hi(0, Qty::Gamma4, gamma4, 2 * *g4.hi + 1, "g4 <= " + std::to_string(*g4.hi));
    if (f.present[3] && gamma3.hi) tighten_hi(1, Qty::Gamma4, gamma4, *gamma3.hi, "gamma3 <= " + std::to_string(*gamma3.hi));
    if (f.present[2] && g3.hi) tighten_hi(2, Qty::G4, g4, *g3.hi, "g3 <= " + std::to_string(*g3.hi));
    if (f.present[2]) tighten_lo(3, Qty::G3, g3, g4.lo, "g4 >= " + std::to_string(g4.lo));
    if (f.present[3]) tighten_lo(4, Qty::Gamma3, gamma3, gamma4.lo, "gamma4 >= " + std::to_string(gamma4.lo));
    if (extra.empty()) return;
    for (auto& e : extra) cs.push_back(std::move(e));
  }
}

const char* rule_name(std::size_t id) {
  const auto& direct = direct_rules();
  return id < direct.size() ? direct[id].name : kClosureRules[id - direct.size()].name;
}

const char* rule_anchor(std::size_t id) {
  const auto& direct = direct_rules();
  return id < direct.size() ? direct[id].anchor : kClosureRules[id - direct.size()].anchor;
}

constexpr std::size_t kOssRule = 13;

Facts gather(const KnotRecord& record) {
  record.validate();
  Facts f{record, {}, {}, {}, {}, {}, record.diagnostics};
  if (record.seifert_matrix) {
    const SeifertMatrix& v = *record.seifert_matrix;
    f.sigma = signature(v);
    f.alexander = alexander(v);
    if (v.size() <= kMaxArfSize) f.arf = arf(v);
  }
  if (!f.sigma && record.sigma) f.sigma = record.sigma;
  if (!f.alexander && record.alexander) f.alexander = record.alexander;
  if (!f.arf && record.arf) f.arf = record.arf;
  if (!f.arf && f.alexander) f.arf = arf_murasugi(*f.alexander);
  if (f.alexander) {
    try {
      f.fox_milnor = fox_milnor(*f.alexander);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Budget) throw;
      f.diagnostics.push_back(std::string("Fox-Milnor skipped: ") + e.what());
    }
  }
  if (record.invariants.upsilon) f.upsilon = upsilon_little(*record.invariants.upsilon);
  return f;
}

std::optional<std::string> find_conflict(const std::vector<Contribution>& cs, const Folded& f, bool& oss_involved) {
  for (std::size_t q = 0; q < 4; ++q) {
    if (!f.present[q] || !f.iv[q].empty()) continue;
    std::string lo_rules, hi_rules;
    for (const auto& c : cs) {
      if (static_cast<std::size_t>(c.qty) != q) continue;
      if (c.is_lo && c.value == f.iv[q].lo) {
        lo_rules += std::string(lo_rules.empty() ? "" : ", ") + rule_name(c.rule);
        if (c.rule == kOssRule) oss_involved = true;
      }
      if (!c.is_lo && c.value == *f.iv[q].hi) hi_rules += std::string(hi_rules.empty() ? "" : ", ") + rule_name(c.rule);
    }
    return std::string(kQtyNames[q]) + " lower bound " + std::to_string(f.iv[q].lo) + " [" + lo_rules +
           "] exceeds upper bound " + std::to_string(*f.iv[q].hi) + " [" + hi_rules + "]";
  }
  return std::nullopt;
}

}  // namespace

std::size_t rule_count() { return direct_rules().size(); }

ObstructionReport aggregate_in_order(const KnotRecord& record, const AggregateOptions& options,
                                     std::span<const std::size_t> order) {
  const auto& rules = direct_rules();
  {
    std::vector<std::size_t> sorted(order.begin(), order.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> expected(rules.size());
    std::iota(expected.begin(), expected.end(), 0);
    if (sorted != expected) fail(ErrorCode::InvalidArgument, "rule order must be a permutation of all rules");
  }

  Facts facts = gather(record);
  Sink sink;
  for (std::size_t id : order) rules[id].apply(id, facts, options, sink);

  std::vector<Contribution> cs = sink.contributions;
  close(cs);
  Folded folded = fold(cs);
  bool oss_involved = false;
  auto conflict = find_conflict(cs, folded, oss_involved);
  if (conflict && oss_involved && options.oss == OssConvention::Plus) {
    facts.diagnostics.push_back("warning: the plus sign convention for the OSS bound contradicts known data (" +
                                *conflict + "); bound dropped");
    std::erase_if(sink.contributions, [](const Contribution& c) { return c.rule == kOssRule; });
    sink.notes.push_back({kOssRule, "dropped: contradicts known gamma4 under the plus convention"});
    cs = sink.contributions;
    close(cs);
    folded = fold(cs);
    oss_involved = false;
    conflict = find_conflict(cs, folded, oss_involved);
  }
  if (conflict) fail(ErrorCode::Inconsistent, record.name + ": contradictory bounds: " + *conflict);

  ObstructionReport report;
  report.name = record.name;
  report.bounds.g4 = folded.iv[0];
  report.bounds.gamma4 = folded.iv[1];
  if (folded.present[2]) report.bounds.g3 = folded.iv[2];
  if (folded.present[3]) report.bounds.gamma3 = folded.iv[3];

  Verdict& v = report.verdict;
  const Interval& g4 = report.bounds.g4;
  v.smoothly_slice = g4.lo >= 1 ? Tri::No : (g4.hi && *g4.hi == 0 ? Tri::Yes : Tri::Unknown);
  if (sink.topologically_no) {
    v.topologically_slice = Tri::No;
  } else if (sink.topologically_yes || v.smoothly_slice == Tri::Yes) {
    v.topologically_slice = Tri::Yes;
  }
  const Interval& gamma4 = report.bounds.gamma4;
  v.nonorientably_slice = gamma4.lo >= 2 ? Tri::No : (gamma4.hi && *gamma4.hi == 1 ? Tri::Yes : Tri::Unknown);

  report.facts.sigma = facts.sigma;
  report.facts.arf = facts.arf;
  report.facts.alexander = facts.alexander;
  if (facts.alexander) report.facts.determinant = abs(numerator(facts.alexander->evaluate(-1)));
  if (facts.fox_milnor) {
    report.facts.fox_milnor_passes = facts.fox_milnor->passes;
    report.facts.fox_milnor_witness = facts.fox_milnor->witness;
  }
  report.facts.upsilon = facts.upsilon;

  struct Entry {
    std::size_t rule;
    std::string text;
  };
  std::vector<Entry> entries;
  for (const auto& c : cs) entries.push_back({c.rule, c.text});
  for (const auto& n : sink.notes) entries.push_back({n.rule, n.text});
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.rule != b.rule ? a.rule < b.rule : a.text < b.text;
  });
  entries.erase(std::unique(entries.begin(), entries.end(),
                            [](const Entry& a, const Entry& b) { return a.rule == b.rule && a.text == b.text; }),
                entries.end());
  for (const auto& e : entries) report.applied_rules.push_back({rule_name(e.rule), rule_anchor(e.rule), e.text});
  report.diagnostics = std::move(facts.diagnostics);
  return report;
}

ObstructionReport aggregate(const KnotRecord& record, const AggregateOptions& options) {
  std::vector<std::size_t> order(rule_count());
  std::iota(order.begin(), order.end(), 0);
  return aggregate_in_order(record, options, order);
}

}  // namespace slicegate
