#include "numeric.hpp"

#include "errors.hpp"

#include <limits>

namespace slicegate {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::NotFound: return "not-found";
    case ErrorCode::Inconsistent: return "inconsistent";
    case ErrorCode::Domain: return "domain";
    case ErrorCode::Budget: return "budget-exceeded";
    case ErrorCode::HalfTwist: return "half-twist-regime";
    case ErrorCode::MissingInvariant: return "missing-invariant";
    case ErrorCode::InvalidAlexander: return "invalid-alexander";
    case ErrorCode::Io: return "io";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

BigInt floor_div(const Rational& r) {
  BigInt n = numerator(r);
  BigInt d = denominator(r);
  BigInt q = n / d;  // truncates toward zero
  if (n % d != 0 && n < 0) q -= 1;
  return q;
}

BigInt ceil_div(const Rational& r) {
  BigInt n = numerator(r);
  BigInt d = denominator(r);
  BigInt q = n / d;
  if (n % d != 0 && n > 0) q += 1;
  return q;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(ErrorCode::Domain, "zero denominator");
  return den < 0 ? Rational(-num, -den) : Rational(num, den);
}

BigInt abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }
Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt x = abs(a);
  BigInt y = abs(b);
  while (y != 0) {
    BigInt r = x % y;
    x = y;
    y = r;
  }
  return x;
}

BigInt exact_sqrt(const BigInt& x) {
  if (x < 0) return -1;
  BigInt r = boost::multiprecision::sqrt(x);
  return r * r == x ? r : BigInt(-1);
}

bool fits_int64(const BigInt& x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t to_int64(const BigInt& x) {
  if (!fits_int64(x)) fail(ErrorCode::Domain, "integer " + x.str() + " exceeds 64 bits");
  return x.convert_to<std::int64_t>();
}

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const Rational& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) fail(ErrorCode::Parse, "malformed rational '" + std::string(whole) + "'");
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') {
      fail(ErrorCode::Parse, "malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view t = trim(text);
  auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(t, text));
  BigInt num = parse_integer(trim(t.substr(0, slash)), text);
  BigInt den = parse_integer(trim(t.substr(slash + 1)), text);
  if (den == 0) fail(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

}  // namespace slicegate
