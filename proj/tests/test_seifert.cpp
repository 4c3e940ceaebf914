#include "errors.hpp"
#include "oracles.hpp"
#include "seifert.hpp"

#include <Eigen/Dense>
#include <doctest.h>

#include <cmath>
#include <complex>

using namespace slicegate;

namespace {

const SeifertMatrix kTrefoil = SeifertMatrix::create({{-1, 1}, {0, -1}});
const SeifertMatrix kFigureEight = SeifertMatrix::create({{1, 1}, {0, -1}});
const SeifertMatrix kUnknot = SeifertMatrix::create({});

LaurentPoly P(std::vector<std::pair<BigInt, int>> terms) { return LaurentPoly::from_terms(terms); }

// Hermitian form (1 - w) V + (1 - conj w) V^T, eigenvalue sign count.
std::optional<int> lt_oracle(const SeifertMatrix& v, double angle) {
  const auto n = static_cast<Eigen::Index>(v.size());
  const std::complex<double> w = std::polar(1.0, 2 * std::acos(-1.0) * angle);
  Eigen::MatrixXcd h(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      h(i, j) = (1.0 - w) * static_cast<double>(v.at(static_cast<int>(i), static_cast<int>(j))) +
                (1.0 - std::conj(w)) * static_cast<double>(v.at(static_cast<int>(j), static_cast<int>(i)));
    }
  }
  if (n == 0) return 0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  int sig = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double ev = es.eigenvalues()(i);
    if (std::abs(ev) < 1e-7) return std::nullopt;
    sig += ev > 0 ? 1 : -1;
  }
  return sig;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("validation") {
  CHECK(code_of([] { SeifertMatrix::create({{1, 1}}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { SeifertMatrix::create({{1}}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { SeifertMatrix::create({{1, 2}, {0, 1}}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { SeifertMatrix::create({{0, 0}, {0, 0}}); }) == ErrorCode::InvalidArgument);
  CHECK_NOTHROW(SeifertMatrix::create({{5, 3}, {2, 7}}));
  CHECK_NOTHROW(SeifertMatrix::create({{0, 0}, {1, 0}}));
  CHECK(kUnknot.size() == 0);
  CHECK(kTrefoil.genus() == 1);
}

TEST_CASE("signature") {
  CHECK(signature(kTrefoil) == -2);
  CHECK(signature(kFigureEight) == 0);
  CHECK(signature(kUnknot) == 0);
  // Hyperbolic block with a zero diagonal.
  CHECK(symmetric_signature({{0, 1}, {1, 0}}) == 0);
  CHECK(symmetric_signature({{0, 0, 1}, {0, 2, 0}, {1, 0, 0}}) == 1);
  CHECK(symmetric_signature({{Rational(1, 2), 3}, {3, Rational(-1, 3)}}) == 0);
}

TEST_CASE("alexander") {
  CHECK(alexander(kFigureEight) == P({{-1, 1}, {3, 0}, {-1, -1}}));
  CHECK(alexander(kUnknot) == LaurentPoly::constant(1));
  CHECK(alexander(kTrefoil) == P({{1, 1}, {-1, 0}, {1, -1}}));
  for (int b = -10; b <= 10; ++b) {
    const SeifertMatrix v = SeifertMatrix::create({{-1, 1}, {0, b}});
    CHECK(equal_up_to_unit(alexander(v), P({{-b, 1}, {2 * b + 1, 0}, {-b, -1}})));
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(kFigureEight) == 5);
  CHECK(determinant(kTrefoil) == 3);
  CHECK(determinant(kUnknot) == 1);
  CHECK(determinant(IntMatrix{{2, 1}, {1, 1}}) == 1);
  CHECK(determinant(IntMatrix{{0, 1, 2}, {1, 0, 3}, {4, -3, 8}}) == -2);
}

TEST_CASE("arf") {
  CHECK(arf(kFigureEight) == 1);
  CHECK(arf(kTrefoil) == 1);
  CHECK(arf(kUnknot) == 0);
  for (int b = -10; b <= 10; ++b) {
    CHECK(arf(SeifertMatrix::create({{-1, 1}, {0, b}})) == (b % 2 != 0 ? 1 : 0));
  }
}

TEST_CASE("arf_murasugi") {
  CHECK(arf_murasugi(P({{-1, 1}, {3, 0}, {-1, -1}})) == 1);
  CHECK(arf_murasugi(LaurentPoly::constant(1)) == 0);
  CHECK(arf_murasugi(P({{-3, 1}, {7, 0}, {-3, -1}})) == 1);
  CHECK(arf_murasugi(P({{2, 1}, {-5, 0}, {2, -1}})) == 0);
  CHECK_THROWS_AS(arf_murasugi(P({{2, 0}})), Error);
  CHECK_THROWS_AS(arf_murasugi(LaurentPoly()), Error);
}

TEST_CASE("levine_tristram") {
  // Angle 1/2 is the ordinary signature.
  CHECK(levine_tristram(kTrefoil, Rational(1, 2)).signature == -2);
  CHECK(levine_tristram(kFigureEight, Rational(1, 2)).signature == 0);

  // Delta(3_1) = t - 1 + t^-1 vanishes at the primitive 6th roots of unity,
  // not at the primitive cube roots, where it equals -2.
  CHECK(oracle::abs_at_angle(alexander(kTrefoil), 1.0 / 6) < 1e-12L);
  CHECK(std::abs(oracle::abs_at_angle(alexander(kTrefoil), 1.0 / 3) - 2) < 1e-12L);
  CHECK(levine_tristram(kTrefoil, Rational(1, 6)).singular);
  CHECK(levine_tristram(kTrefoil, Rational(5, 6)).singular);
  const LevineTristram third = levine_tristram(kTrefoil, Rational(1, 3));
  CHECK_FALSE(third.singular);
  CHECK(third.signature == -2);
  CHECK(levine_tristram(kTrefoil, Rational(1, 8)).signature == 0);
  CHECK(levine_tristram(kTrefoil, Rational(1, 4)).signature == -2);

  const LevineTristram fig8 = levine_tristram(kFigureEight, Rational(1, 4));
  CHECK_FALSE(fig8.singular);
  CHECK(fig8.signature == 0);

  CHECK(levine_tristram(kUnknot, Rational(1, 3)).signature == 0);
  CHECK_THROWS_AS(levine_tristram(kTrefoil, Rational(0)), Error);
  CHECK_THROWS_AS(levine_tristram(kTrefoil, Rational(1)), Error);
  // Angles are taken mod 1.
  CHECK(levine_tristram(kTrefoil, Rational(4, 3)).signature == -2);
  CHECK(levine_tristram(kTrefoil, Rational(-2, 3)).signature == -2);
}

TEST_CASE("genus_bounds_from_matrix") {
  const GenusBounds t = genus_bounds_from_matrix(kTrefoil);
  CHECK(t.g4 == Interval{1, 1});
  const GenusBounds u = genus_bounds_from_matrix(kUnknot);
  CHECK(u.g4 == Interval{0, 0});
  const GenusBounds f = genus_bounds_from_matrix(kFigureEight);
  CHECK(f.g4 == Interval{0, 1});
  REQUIRE(f.g3);
  CHECK(*f.g3 == Interval{0, 1});
  CHECK(f.gamma4 == Interval{1, 3});
}

TEST_CASE("property: signature is even, bounded, and matches the eigenvalue oracle") {
  oracle::Rng rng(21);
  for (int i = 0; i < 500; ++i) {
    const int n = 2 * static_cast<int>(oracle::uniform(rng, 1, 3));
    const auto e = oracle::random_seifert(rng, n, 5);
    const SeifertMatrix v = SeifertMatrix::create(e);
    const int s = signature(v);
    CHECK(s % 2 == 0);
    CHECK(std::abs(s) <= n);
    CHECK(s == oracle::float_signature(e));
  }
}

TEST_CASE("property: Alexander polynomial matches a cofactor-expansion oracle") {
  oracle::Rng rng(22);
  for (int i = 0; i < 200; ++i) {
    const int n = 2 * static_cast<int>(oracle::uniform(rng, 0, 3));
    const auto e = oracle::random_seifert(rng, n, 4);
    const LaurentPoly d = alexander(SeifertMatrix::create(e));
    CHECK(oracle::canonical(d) == oracle::canonical(oracle::alexander_det(e)));
    CHECK(d.evaluate(1) == 1);
    CHECK(d == involute(d));
  }
}

TEST_CASE("property: determinant matches |det(V + V^T)| by cofactor expansion") {
  oracle::Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    const int n = 2 * static_cast<int>(oracle::uniform(rng, 0, 3));
    const auto e = oracle::random_seifert(rng, n, 5);
    std::vector<std::vector<BigInt>> s(e.size(), std::vector<BigInt>(e.size()));
    for (std::size_t r = 0; r < e.size(); ++r) {
      for (std::size_t c = 0; c < e.size(); ++c) s[r][c] = e[r][c] + e[c][r];
    }
    CHECK(determinant(SeifertMatrix::create(e)) == abs(oracle::laplace_det(s)));
  }
}

TEST_CASE("property: Arf agrees with Murasugi and with a symplectic-basis oracle (n <= 10)") {
  oracle::Rng rng(24);
  for (int i = 0; i < 300; ++i) {
    const int n = 2 * static_cast<int>(oracle::uniform(rng, 0, 5));
    const auto e = oracle::random_seifert(rng, n, 4);
    const SeifertMatrix v = SeifertMatrix::create(e);
    const int a = arf(v);
    CHECK(a == arf_murasugi(alexander(v)));
    CHECK(a == oracle::arf_symplectic(e));
  }
}

TEST_CASE("property: Levine-Tristram at 1/2 equals the signature") {
  oracle::Rng rng(25);
  for (int i = 0; i < 200; ++i) {
    const int n = 2 * static_cast<int>(oracle::uniform(rng, 0, 3));
    const SeifertMatrix v = SeifertMatrix::create(oracle::random_seifert(rng, n, 5));
    const LevineTristram lt = levine_tristram(v, Rational(1, 2));
    REQUIRE_FALSE(lt.singular);
    CHECK(lt.signature == signature(v));
  }
}

TEST_CASE("property: Levine-Tristram singularity and value match a complex evaluation oracle") {
  oracle::Rng rng(26);
  int singular_seen = 0;
  for (int i = 0; i < 300; ++i) {
    const int n = 2 * static_cast<int>(oracle::uniform(rng, 1, 2));
    const SeifertMatrix v = SeifertMatrix::create(oracle::random_seifert(rng, n, 3));
    const std::int64_t den = oracle::uniform(rng, 2, 12);
    const std::int64_t num = oracle::uniform(rng, 1, den - 1);
    const Rational angle(num, den);
    const LevineTristram lt = levine_tristram(v, angle);
    const double a = static_cast<double>(num) / static_cast<double>(den);
    const bool oracle_singular = oracle::abs_at_angle(alexander(v), a) < 1e-9L;
    CHECK(lt.singular == oracle_singular);
    if (lt.singular) {
      ++singular_seen;
    } else {
      const auto expect = lt_oracle(v, a);
      REQUIRE(expect);
      CHECK(lt.signature == *expect);
    }
  }
  CHECK(singular_seen > 0);
}

TEST_CASE("property: congruence by 100 random unimodular P preserves signature and Arf") {
  oracle::Rng rng(27);
  for (int i = 0; i < 100; ++i) {
    const int n = 2 * static_cast<int>(oracle::uniform(rng, 1, 3));
    const auto e = oracle::random_seifert(rng, n, 4);
    const auto p = oracle::random_unimodular(rng, n, 6);
    const auto moved = oracle::congruent(e, p);
    const SeifertMatrix v = SeifertMatrix::create(e);
    const SeifertMatrix w = SeifertMatrix::create(moved);
    CHECK(signature(w) == signature(v));
    CHECK(arf(w) == arf(v));
    CHECK(alexander(w) == alexander(v));
  }
}

TEST_CASE("property: validation accepts generated matrices and rejects non-unimodular ones") {
  oracle::Rng rng(28);
  for (int i = 0; i < 100; ++i) {
    const int n = 2 * static_cast<int>(oracle::uniform(rng, 1, 3));
    CHECK_NOTHROW(SeifertMatrix::create(oracle::random_seifert(rng, n, 5)));
    const int m = static_cast<int>(oracle::uniform(rng, 1, 6));
    CHECK_THROWS_AS(SeifertMatrix::create(oracle::random_invalid(rng, m, 5)), Error);
  }
}
