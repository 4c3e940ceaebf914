#pragma once

#include "numeric.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace slicegate {

class IntPoly;

/// Integer Laurent polynomial in one variable. Canonical form: no stored
/// zero coefficients, so structural equality is polynomial equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly constant(const BigInt& c);
  static LaurentPoly monomial(const BigInt& c, int exponent);
  /// Terms as (coefficient, exponent) pairs; repeated exponents accumulate.
  static LaurentPoly from_terms(const std::vector<std::pair<BigInt, int>>& terms);

  const std::map<int, BigInt>& terms() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  BigInt coefficient(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  LaurentPoly involute() const;
  LaurentPoly shifted(int k) const;

  /// Exact value at a nonzero integer.
  Rational evaluate(const BigInt& x) const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Human form, e.g. "-t + 3 - t^-1".
  std::string to_string() const;

 private:
  void add_term(int exponent, const BigInt& c);

  std::map<int, BigInt> coeffs_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly involute(const LaurentPoly& p);
Rational evaluate_int(const LaurentPoly& p, const BigInt& x);

/// Dense integer polynomial, coefficients low to high, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly from_laurent(const LaurentPoly& p);  // requires min exponent >= 0

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& leading() const { return coeffs_.back(); }
  BigInt at(int i) const;

  BigInt evaluate(const BigInt& x) const;
  Rational evaluate(const Rational& x) const;
  BigInt content() const;

  /// t^deg * p(1/t) with sign flipped so the leading coefficient is positive.
  IntPoly reciprocal() const;
  IntPoly negated() const;
  LaurentPoly to_laurent() const;

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;
  /// Graded order: degree first, then coefficients low to high.
  friend bool operator<(const IntPoly& a, const IntPoly& b);

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Quotient if `divisor` divides `dividend` exactly over Z.
std::optional<IntPoly> exact_divide(const IntPoly& dividend, const IntPoly& divisor);

/// Remainder of division by a monic polynomial.
IntPoly remainder_monic(const IntPoly& dividend, const IntPoly& monic);

/// p = sign * t^shift * q.
struct Unit {
  int sign = 1;
  int shift = 0;
  friend bool operator==(const Unit&, const Unit&) = default;
};

struct Normalized {
  IntPoly poly;
  Unit unit;
};

/// Shift the lowest exponent to zero and make the leading coefficient positive.
Normalized normalize(const LaurentPoly& p);

bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b);

struct Factorization {
  BigInt content = 1;
  std::vector<IntPoly> factors;  // irreducible, primitive, positive leading; sorted; repeated by multiplicity
};

/// Kronecker factorization up to this degree of a primitive non-linear part.
inline constexpr int kMaxFactorDegree = 10;

Factorization factor(const IntPoly& q);

struct FoxMilnorResult {
  bool passes = false;
  std::optional<LaurentPoly> witness;  // f with p = unit * f(t) f(1/t)
  std::string reason;
};

FoxMilnorResult fox_milnor(const LaurentPoly& p);

/// The m-th cyclotomic polynomial.
IntPoly cyclotomic(int m);

}  // namespace slicegate
