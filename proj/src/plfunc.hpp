#pragma once

#include "numeric.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace slicegate {

/// Piecewise-linear function on [0, end] with exact rational breakpoints,
/// starting at (0, 0). Collinear interior breakpoints are merged away, so
/// equal functions compare equal.
class PLFunction {
 public:
  struct Breakpoint {
    Rational s;
    Rational value;
    friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
  };

  /// Validates: first point (0, 0), strictly increasing s, positive end.
  static PLFunction from_breakpoints(std::vector<Breakpoint> points);
  /// An Upsilon function: additionally the domain must be exactly [0, 2].
  static PLFunction upsilon(std::vector<Breakpoint> points);
  static PLFunction zero(const Rational& end = 2);

  const std::vector<Breakpoint>& breakpoints() const { return points_; }
  const Rational& domain_end() const { return points_.back().s; }

  /// Throws Domain outside [0, end].
  Rational eval(const Rational& s) const;

  friend bool operator==(const PLFunction&, const PLFunction&) = default;

 private:
  explicit PLFunction(std::vector<Breakpoint> points) : points_(std::move(points)) {}
  std::vector<Breakpoint> points_;
};

Rational eval(const PLFunction& f, const Rational& s);

/// Upsilon at s = 1.
Rational upsilon_little(const PLFunction& f);

/// ceil(max over s in (0, 1] of |f(s)| / s): the bound |Upsilon(s)| <= s * g4.
std::int64_t g4_lower_bound(const PLFunction& f);

enum class OssConvention { Plus, Minus };

/// |upsilon + sigma/2| (Plus) or |upsilon - sigma/2| (Minus).
Rational oss_gamma4_lower_bound(const Rational& upsilon, std::int64_t sigma,
                                OssConvention convention = OssConvention::Minus);

struct CableEnvelope {
  PLFunction lower;
  PLFunction upper;
};

/// Envelopes f(p s) - (p-1)(q+-1) s / 2 for the (p, q)-cable, on [0, 2/p].
CableEnvelope cable_sandwich(const PLFunction& f, std::int64_t p, std::int64_t q);

/// |upsilon + q/2| <= 1 for a (2, q)-cable; q must be odd.
bool two_q_corollary_check(const Rational& upsilon_cable, std::int64_t q);

/// The allowed range [-q/2 - 1, -q/2 + 1] for upsilon of a (2, q)-cable.
std::pair<Rational, Rational> two_q_upsilon_interval(std::int64_t q);

struct CobordismCheck {
  Rational upsilon_start;
  Rational upsilon_end;
  std::int64_t euler = 0;
  std::int64_t betti = 1;
};

/// |upsilon_start - upsilon_end + e/4| <= b1/2.
bool cobordism_inequality(const CobordismCheck& c);

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// Integers e with |upsilon + q/2 + e/4| <= 3/2.
IntRange euler_number_range(const Rational& upsilon_wh, std::int64_t q);

}  // namespace slicegate
