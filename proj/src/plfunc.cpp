#include "plfunc.hpp"

#include "errors.hpp"

#include <numeric>

namespace slicegate {

namespace {

std::vector<PLFunction::Breakpoint> merge_collinear(std::vector<PLFunction::Breakpoint> pts) {
  std::vector<PLFunction::Breakpoint> out;
  for (auto& p : pts) {
    while (out.size() >= 2) {
      const auto& a = out[out.size() - 2];
      const auto& b = out.back();
      // b is redundant when slopes a->b and b->p agree.
      if ((b.value - a.value) * (p.s - b.s) == (p.value - b.value) * (b.s - a.s)) {
        out.pop_back();
      } else {
        break;
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

PLFunction PLFunction::from_breakpoints(std::vector<Breakpoint> points) {
  if (points.size() < 2) fail(ErrorCode::InvalidArgument, "PL function needs at least two breakpoints");
  if (points.front().s != 0 || points.front().value != 0) {
    fail(ErrorCode::InvalidArgument, "PL function must start at (0, 0)");
  }
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i - 1].s < points[i].s)) {
      fail(ErrorCode::InvalidArgument, "PL breakpoints must have strictly increasing s");
    }
  }
  return PLFunction(merge_collinear(std::move(points)));
}

PLFunction PLFunction::upsilon(std::vector<Breakpoint> points) {
  PLFunction f = from_breakpoints(std::move(points));
  if (f.domain_end() != 2) fail(ErrorCode::InvalidArgument, "Upsilon functions are defined on [0, 2]");
  return f;
}

PLFunction PLFunction::zero(const Rational& end) { return from_breakpoints({{0, 0}, {end, 0}}); }

Rational PLFunction::eval(const Rational& s) const {
  if (s < 0 || s > domain_end()) {
    fail(ErrorCode::Domain, "s = " + to_string(s) + " outside [0, " + to_string(domain_end()) + "]");
  }
  for (std::size_t i = 1; i < points_.size(); ++i) {
    const auto& a = points_[i - 1];
    const auto& b = points_[i];
    if (s <= b.s) return a.value + (b.value - a.value) * (s - a.s) / (b.s - a.s);
  }
  return points_.back().value;
}

Rational eval(const PLFunction& f, const Rational& s) { return f.eval(s); }

Rational upsilon_little(const PLFunction& f) { return f.eval(1); }

std::int64_t g4_lower_bound(const PLFunction& f) {
  // |f(s)|/s on a linear piece is monotone between breakpoints (and constant
  // near 0 since f(0) = 0), so the supremum over (0, 1] is attained at a
  // breakpoint or at s = 1.
  Rational best = 0;
  std::vector<Rational> candidates{Rational(1)};
  for (const auto& p : f.breakpoints()) {
    if (p.s > 0 && p.s <= 1) candidates.push_back(p.s);
  }
  for (const auto& s : candidates) {
    if (s > f.domain_end()) continue;
    best = std::max(best, abs(f.eval(s)) / s);
  }
  return to_int64(ceil_div(best));
}

Rational oss_gamma4_lower_bound(const Rational& upsilon, std::int64_t sigma, OssConvention convention) {
  const Rational half = Rational(sigma, 2);
  return abs(convention == OssConvention::Plus ? Rational(upsilon + half) : Rational(upsilon - half));
}

CableEnvelope cable_sandwich(const PLFunction& f, std::int64_t p, std::int64_t q) {
  if (p <= 0) fail(ErrorCode::InvalidArgument, "cable parameter p must be positive");
  if (std::gcd(p, q) != 1) {
    fail(ErrorCode::InvalidArgument, "cable parameters (" + std::to_string(p) + ", " + std::to_string(q) +
                                         ") are not coprime");
  }
  if (f.domain_end() != 2) fail(ErrorCode::InvalidArgument, "cable envelopes need Upsilon on [0, 2]");
  const Rational lower_slope = Rational((p - 1) * (q + 1), 2);
  const Rational upper_slope = Rational((p - 1) * (q - 1), 2);
  std::vector<PLFunction::Breakpoint> lo, hi;
  for (const auto& bp : f.breakpoints()) {
    const Rational s = bp.s / p;
    lo.push_back({s, bp.value - lower_slope * s});
    hi.push_back({s, bp.value - upper_slope * s});
  }
  return {PLFunction::from_breakpoints(std::move(lo)), PLFunction::from_breakpoints(std::move(hi))};
}

namespace {

void require_odd(std::int64_t q) {
  if (q % 2 == 0) fail(ErrorCode::InvalidArgument, "q must be odd, got " + std::to_string(q));
}

}  // namespace

bool two_q_corollary_check(const Rational& upsilon_cable, std::int64_t q) {
  require_odd(q);
  return abs(upsilon_cable + Rational(q, 2)) <= 1;
}

std::pair<Rational, Rational> two_q_upsilon_interval(std::int64_t q) {
  require_odd(q);
  const Rational centre = Rational(-q, 2);
  return {centre - 1, centre + 1};
}

bool cobordism_inequality(const CobordismCheck& c) {
  if (c.betti < 1) fail(ErrorCode::InvalidArgument, "first Betti number must be at least 1");
  return abs(c.upsilon_start - c.upsilon_end + Rational(c.euler, 4)) <= Rational(c.betti, 2);
}

IntRange euler_number_range(const Rational& upsilon_wh, std::int64_t q) {
  require_odd(q);
  // -3/2 <= upsilon + q/2 + e/4 <= 3/2, times 4.
  const Rational base = 4 * upsilon_wh + 2 * q;
  return {to_int64(ceil_div(Rational(-6) - base)), to_int64(floor_div(Rational(6) - base))};
}

}  // namespace slicegate
