#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>

namespace slicegate {

/// Integer interval [lo, hi]; an absent hi is unbounded above.
struct Interval {
  std::int64_t lo = 0;
  std::optional<std::int64_t> hi;

  static Interval exact(std::int64_t v) { return {v, v}; }
  static Interval at_least(std::int64_t v) { return {v, std::nullopt}; }

  bool empty() const { return hi && *hi < lo; }
  bool contains(std::int64_t v) const { return v >= lo && (!hi || v <= *hi); }

  Interval intersect(const Interval& other) const {
    Interval r{std::max(lo, other.lo), hi};
    if (other.hi) r.hi = hi ? std::min(*hi, *other.hi) : *other.hi;
    return r;
  }

  std::string to_string() const {
    return "[" + std::to_string(lo) + ", " + (hi ? std::to_string(*hi) : std::string("inf")) + "]";
  }

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct GenusBounds {
  Interval g4{0, std::nullopt};
  Interval gamma4{1, std::nullopt};
  std::optional<Interval> g3;
  std::optional<Interval> gamma3;

  friend bool operator==(const GenusBounds&, const GenusBounds&) = default;
};

}  // namespace slicegate
