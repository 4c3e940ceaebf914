// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include "errors.hpp"
#include "knotdb.hpp"
#include "laurent.hpp"
#include "obstruct.hpp"
#include "oracles.hpp"
#include "plfunc.hpp"
#include "seifert.hpp"
#include "whitehead.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace slicegate;

namespace {

struct Outcome {
  bool pass = true;
  std::string first_failure;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) first_failure = what;
    pass = false;
  }
};

const KnotStore& seeds() {
  static const KnotStore store = seed_table();
  return store;
}

// -b t + (2b + 1) - b t^-1.
LaurentPoly closed_form(std::int64_t b) {
  return LaurentPoly::from_terms({{BigInt(-b), 1}, {BigInt(2 * b + 1), 0}, {BigInt(-b), -1}});
}

// Arf by majority vote of q(x) = x^T V x mod 2 over all of GF(2)^n.
int arf_brute_force(const SeifertMatrix::Entries& v) {
  const std::size_t n = v.size();
  std::size_t odd = 0;
  for (std::size_t x = 0; x < (std::size_t{1} << n); ++x) {
    std::int64_t q = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if ((x >> i & 1) && (x >> j & 1)) q += v[i][j];
      }
    }
    if (q % 2 != 0) ++odd;
  }
  return 2 * odd > (std::size_t{1} << n) ? 1 : 0;
}

bool has_rule(const ObstructionReport& r, const std::string& name) {
  return std::any_of(r.applied_rules.begin(), r.applied_rules.end(), [&](const AppliedRule& a) { return a.rule == name; });
}

void criterion1(Outcome& o) {
  const SeifertMatrix& trefoil = *seeds().lookup("3_1").seifert_matrix;
  const SeifertMatrix& eight = *seeds().lookup("4_1").seifert_matrix;
  o.expect(signature(trefoil) == -2, "sigma(3_1) = -2");
  o.expect(signature(eight) == 0, "sigma(4_1) = 0");
  o.expect(arf(eight) == 1, "arf(4_1) = 1");
  o.detail << "sigma(3_1) = " << signature(trefoil) << ", sigma(4_1) = " << signature(eight)
           << ", arf(4_1) = " << arf(eight);
}

void criterion2(Outcome& o) {
  int literal = 0;
  int positive = 0;
  int mirrored = 0;
  for (Clasp c : {Clasp::Positive, Clasp::Negative}) {
    for (std::int64_t b = -10; b <= 10; ++b) {
      const SeifertMatrix v = whitehead::pattern_matrix(c, b);
      const LaurentPoly delta = alexander(v);
      const bool matrix_agrees = oracle::canonical(delta) == oracle::canonical(oracle::alexander_det(v.entries()));
      o.expect(matrix_agrees, "alexander(V) matches the determinant oracle");
      if (equal_up_to_unit(delta, closed_form(b))) {
        ++literal;
        if (c == Clasp::Positive) ++positive;
      }
      if (c == Clasp::Negative && equal_up_to_unit(delta, closed_form(-b))) ++mirrored;
    }
  }
  o.expect(literal == 42, "negative clasp differs from the closed form at the same b");
  o.detail << literal << "/42 cases equal the closed form at the same b; positive clasp " << positive
           << "/21; negative clasp against the closed form at -b " << mirrored << "/21";
}

void criterion3(Outcome& o) {
  int agree = 0;
  for (Clasp c : {Clasp::Positive, Clasp::Negative}) {
    for (std::int64_t b = -10; b <= 10; ++b) {
      const SeifertMatrix v = whitehead::pattern_matrix(c, b);
      const int brute = arf_brute_force(v.entries());
      const int murasugi = arf_murasugi(alexander(v));
      const int parity = static_cast<int>(((b % 2) + 2) % 2);
      bool ok = brute == murasugi && murasugi == parity && arf(v) == brute;
      const WhiteheadParams p{c, b, 0, "unknot"};
      if (!p.half_twist()) ok = ok && whitehead::arf_whitehead(p) == parity;
      o.expect(ok, "Arf agreement at b = " + std::to_string(b));
      if (ok) ++agree;
    }
  }
  o.detail << agree << "/42 cases agree";
}

void criterion4(Outcome& o) {
  const KnotRecord& unknot = seeds().lookup("unknot");
  for (int t = 1; t <= 9; ++t) {
    const ObstructionReport r = aggregate(whitehead::make_record({Clasp::Positive, t, 0, "unknot"}, unknot));
    const Interval want = t % 2 != 0 ? Interval{2, 2} : Interval{1, 2};
    o.expect(r.bounds.gamma4 == want, "gamma4 of Wh+_" + std::to_string(t) + "(U)");
    o.expect(has_rule(r, "Whitehead band move"), "band move rule for t = " + std::to_string(t));
    if (t % 2 != 0) o.expect(has_rule(r, "Yasuhara Prop 5.1"), "Yasuhara rule for t = " + std::to_string(t));
  }
  o.detail << "t = 1..9";
}

void criterion5(Outcome& o) {
  const FoxMilnorResult eight = fox_milnor(alexander(*seeds().lookup("4_1").seifert_matrix));
  o.expect(!eight.passes, "Delta(4_1) fails");

  const LaurentPoly six = LaurentPoly::from_terms({{2, 1}, {-5, 0}, {2, -1}});
  const FoxMilnorResult r = fox_milnor(six);
  o.expect(r.passes, "Delta(6_1) passes");
  o.expect(r.witness && equal_up_to_unit(mul(*r.witness, involute(*r.witness)), six), "6_1 witness re-multiplies");

  const FoxMilnorResult one = fox_milnor(LaurentPoly::from_terms({{1, 0}}));
  o.expect(one.passes, "Delta = 1 passes");
  if (r.witness) o.detail << "6_1 witness " << r.witness->to_string();
}

void criterion6(Outcome& o) {
  CompanionInvariants zero;
  zero.tau = 0;
  const PLFunction f0 = whitehead::upsilon_whitehead({Clasp::Positive, 0, 0, "4_1"}, zero);
  o.expect(f0 == PLFunction::zero() && upsilon_little(f0) == 0, "tau = 0 gives zero");

  CompanionInvariants one;
  one.tau = 1;
  const PLFunction f1 = whitehead::upsilon_whitehead({Clasp::Positive, 0, 0, "3_1"}, one);
  o.expect(f1 == PLFunction::upsilon({{0, 0}, {1, -1}, {2, 0}}) && upsilon_little(f1) == -1, "tau = 1 gives -1");

  CompanionInvariants minus_one;
  minus_one.tau = -1;
  const PLFunction f2 = whitehead::upsilon_whitehead({Clasp::Negative, 0, 0, "m3_1"}, minus_one);
  o.expect(f2 == PLFunction::upsilon({{0, 0}, {1, 1}, {2, 0}}) && upsilon_little(f2) == 1, "mirror gives +1");
  o.detail << "upsilon = " << to_string(upsilon_little(f0)) << ", " << to_string(upsilon_little(f1)) << ", "
           << to_string(upsilon_little(f2));
}

void criterion7(Outcome& o) {
  o.expect(euler_number_range(0, 1) == IntRange{-8, 4}, "euler_number_range(0, 1) = [-8, 4]");
  oracle::Rng rng(7001);
  int instances = 0;
  int draws = 0;
  while (instances < 1000 && draws < 100000) {
    ++draws;
    const std::int64_t q = 2 * oracle::uniform(rng, -5, 5) + 1;
    const Rational u1 = Rational(-q, 2) + oracle::random_rational(rng, 6, 4);
    const std::int64_t e = oracle::uniform(rng, -20, 20);
    const Rational u0 = u1 - Rational(e, 4) + oracle::random_rational(rng, 4, 4);
    if (!cobordism_inequality({u0, u1, e, 1}) || !two_q_corollary_check(u1, q)) continue;
    ++instances;
    const IntRange r = euler_number_range(u0, q);
    o.expect(abs(u0 + Rational(q, 2) + Rational(e, 4)) <= Rational(3, 2) && e >= r.lo && e <= r.hi,
             "triangle inequality");
  }
  o.expect(instances == 1000, "1000 instances satisfying both premises");
  o.detail << instances << " instances";
}

void criterion8(Outcome& o) {
  const CableEnvelope e = cable_sandwich(PLFunction::zero(), 2, 1);
  o.expect(e.lower == PLFunction::from_breakpoints({{0, 0}, {1, -1}}), "lower envelope is -s");
  o.expect(e.upper == PLFunction::zero(1), "upper envelope is 0");
  const auto [lo, hi] = two_q_upsilon_interval(1);
  const Rational at_lo = e.lower.eval(1);
  const Rational at_hi = e.upper.eval(1);
  o.expect(lo <= at_lo && at_hi <= hi, "envelope at 1 within the (2,1) interval");
  o.detail << "envelope at 1: [" << to_string(at_lo) << ", " << to_string(at_hi) << "] within [" << to_string(lo)
           << ", " << to_string(hi) << "]";
}

void criterion9(Outcome& o) {
  oracle::Rng rng(9001);
  int disagreements = 0;
  for (int i = 0; i < 500; ++i) {
    const int n = 2 * static_cast<int>(oracle::uniform(rng, 1, 3));
    const auto entries = oracle::random_seifert(rng, n, 5);
    const SeifertMatrix v = SeifertMatrix::create(entries);
    if (signature(v) != oracle::float_signature(entries)) ++disagreements;
  }
  o.expect(disagreements == 0, "no disagreements");
  o.detail << disagreements << " disagreements in 500";
}

void criterion10(Outcome& o) {
  oracle::Rng rng(10001);
  int rejected = 0;
  int accepted = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = static_cast<int>(oracle::uniform(rng, 1, 6));
    try {
      SeifertMatrix::create(oracle::random_invalid(rng, n, 5));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InvalidArgument) ++rejected;
    }
  }
  for (int i = 0; i < 100; ++i) {
    const int n = 2 * static_cast<int>(oracle::uniform(rng, 1, 3));
    try {
      SeifertMatrix::create(oracle::random_seifert(rng, n, 5));
      ++accepted;
    } catch (const Error&) {
    }
  }
  o.expect(rejected == 100 && accepted == 100, "100 rejected and 100 accepted");
  o.detail << rejected << " rejected, " << accepted << " accepted";
}

void criterion11(Outcome& o) {
  const KnotRecord wh = whitehead::make_record({Clasp::Positive, 0, 0, "4_1"}, seeds().lookup("4_1"));
  const ObstructionReport r = aggregate(wh);
  o.expect(r.verdict.topologically_slice == Tri::Yes, "topologically slice");
  o.expect(r.verdict.smoothly_slice == Tri::Unknown, "smoothly unknown");
  o.expect(r.bounds.gamma4 == Interval{1, 2}, "gamma4 in [1,2]");
  o.detail << "topologically_slice " << tri_name(r.verdict.topologically_slice) << ", smoothly_slice "
           << tri_name(r.verdict.smoothly_slice) << ", gamma4 [" << r.bounds.gamma4.lo << ", "
           << (r.bounds.gamma4.hi ? std::to_string(*r.bounds.gamma4.hi) : "inf") << "]";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"seed examples", criterion1},
      {"closed form vs determinant", criterion2},
      {"Arf triple agreement", criterion3},
      {"gamma4 of twisted doubles of the unknot", criterion4},
      {"Fox-Milnor", criterion5},
      {"Whitehead Upsilon", criterion6},
      {"cobordism arithmetic", criterion7},
      {"cable sandwich", criterion8},
      {"signature oracle equivalence", criterion9},
      {"unimodularity validation", criterion10},
      {"untwisted double of the figure eight", criterion11},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    std::string line = o.detail.str();
    if (!o.pass) {
      ++failures;
      line += (line.empty() ? "" : "; ") + std::string("failed: ") + o.first_failure;
    }
    std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                line.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
