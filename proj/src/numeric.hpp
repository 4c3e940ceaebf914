#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace slicegate {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

/// num / den with the sign moved to the numerator. Throws Domain when den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

BigInt floor_div(const Rational& r);
BigInt ceil_div(const Rational& r);

BigInt abs(const BigInt& x);
Rational abs(const Rational& x);

BigInt gcd(const BigInt& a, const BigInt& b);

/// Integer square root when `x` is a perfect square, -1 otherwise.
BigInt exact_sqrt(const BigInt& x);

bool fits_int64(const BigInt& x);
std::int64_t to_int64(const BigInt& x);

/// Formats as "p" or "p/q" (lowest terms, sign on the numerator).
std::string to_string(const Rational& r);
std::string to_string(const BigInt& x);

/// Parses "p", "-p", or "p/q". Throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace slicegate
