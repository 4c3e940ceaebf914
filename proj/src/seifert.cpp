#include "seifert.hpp"

#include "errors.hpp"

#include <Eigen/Dense>

#include <bit>
#include <cmath>
#include <complex>
#include <numbers>

namespace slicegate {

SeifertMatrix SeifertMatrix::create(Entries entries) {
  const std::size_t n = entries.size();
  for (const auto& row : entries) {
    if (row.size() != n) fail(ErrorCode::InvalidArgument, "Seifert matrix must be square");
  }
  if (n % 2 != 0) fail(ErrorCode::InvalidArgument, "Seifert matrix must have even size, got " + std::to_string(n));
  BigInt det = skew_determinant(entries);
  if (det != 1 && det != -1) {
    fail(ErrorCode::InvalidArgument, "V - V^T is not unimodular (det = " + det.str() + ")");
  }
  return SeifertMatrix(std::move(entries));
}

BigInt determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

IntMatrix combine(const SeifertMatrix::Entries& v, const BigInt& a, const BigInt& b) {
  // a * V + b * V^T
  const std::size_t n = v.size();
  IntMatrix m(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a * v[i][j] + b * v[j][i];
  }
  return m;
}

}  // namespace

BigInt skew_determinant(const SeifertMatrix::Entries& entries) { return determinant(combine(entries, 1, -1)); }

int symmetric_signature(RationalMatrix a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;
  int sig = 0;

  auto erase = [&](std::size_t idx) { active.erase(std::find(active.begin(), active.end(), idx)); };

  while (!active.empty()) {
    auto pivot = std::find_if(active.begin(), active.end(), [&](std::size_t k) { return a[k][k] != 0; });
    if (pivot != active.end()) {
      const std::size_t k = *pivot;
      const Rational d = a[k][k];
      sig += d > 0 ? 1 : -1;
      erase(k);
      for (std::size_t i : active) {
        for (std::size_t j : active) a[i][j] -= a[i][k] * a[k][j] / d;
      }
      continue;
    }
    // Zero diagonal: split off a hyperbolic plane, which has signature 0.
    std::size_t bi = n, bj = n;
    for (std::size_t x = 0; x < active.size() && bi == n; ++x) {
      for (std::size_t y = x + 1; y < active.size(); ++y) {
        if (a[active[x]][active[y]] != 0) {
          bi = active[x];
          bj = active[y];
          break;
        }
      }
    }
    if (bi == n) break;
    const Rational c = a[bi][bj];
    erase(bi);
    erase(bj);
    for (std::size_t r : active) {
      for (std::size_t s : active) a[r][s] -= (a[r][bi] * a[bj][s] + a[r][bj] * a[bi][s]) / c;
    }
  }
  return sig;
}

int signature(const SeifertMatrix& v) {
  IntMatrix s = combine(v.entries(), 1, 1);
  RationalMatrix r(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) r[i].assign(s[i].begin(), s[i].end());
  return symmetric_signature(std::move(r));
}

LaurentPoly alexander(const SeifertMatrix& v) {
  const int n = v.size();
  if (n == 0) return LaurentPoly::constant(1);
  // det(V - k V^T) at k = 0..n determines the degree-n polynomial.
  std::vector<Rational> xs, ys;
  for (int k = 0; k <= n; ++k) {
    xs.emplace_back(k);
    ys.emplace_back(determinant(combine(v.entries(), 1, -k)));
  }
  // Lagrange interpolation into monomial coefficients.
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int i = 0; i <= n; ++i) {
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (int j = 0; j <= n; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * xs[static_cast<std::size_t>(j)];
      }
      basis = std::move(next);
      denom *= xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(j)];
    }
    const Rational scale = ys[static_cast<std::size_t>(i)] / denom;
    for (std::size_t k = 0; k < basis.size(); ++k) coeffs[k] += basis[k] * scale;
  }
  std::vector<std::pair<BigInt, int>> terms;
  for (int k = 0; k <= n; ++k) {
    const Rational& c = coeffs[static_cast<std::size_t>(k)];
    if (!is_integer(c)) fail(ErrorCode::Internal, "non-integral Alexander coefficient");
    terms.emplace_back(numerator(c), k - n / 2);
  }
  LaurentPoly p = LaurentPoly::from_terms(terms);
  if (p.evaluate(1) < 0) p = -p;
  return p;
}

BigInt determinant(const SeifertMatrix& v) { return abs(determinant(combine(v.entries(), 1, 1))); }

int arf(const SeifertMatrix& v) {
  const int n = v.size();
  if (n > kMaxArfSize) {
    fail(ErrorCode::Budget, "Arf brute force limited to size " + std::to_string(kMaxArfSize));
  }
  if (n == 0) return 0;
  // q(x) = sum_i V_ii x_i + sum_{i<j} (V_ij + V_ji) x_i x_j  (mod 2).
  // Flipping bit i changes q by V_ii + B(x, e_i), B the polar form.
  std::uint32_t diag = 0;
  std::vector<std::uint32_t> polar(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if ((v.at(i, i) & 1) != 0) diag |= 1u << i;
    for (int j = 0; j < n; ++j) {
      if (i != j && ((v.at(i, j) + v.at(j, i)) & 1) != 0) polar[static_cast<std::size_t>(i)] |= 1u << j;
    }
  }
  std::int64_t sum = 1;  // x = 0
  std::uint32_t x = 0;
  unsigned q = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < total; ++step) {
    const int i = std::countr_zero(step);  // Gray code flips bit i
    q ^= ((diag >> i) & 1u) ^ (std::popcount(x & polar[static_cast<std::size_t>(i)]) & 1u);
    x ^= 1u << i;
    sum += q ? -1 : 1;
  }
  const std::int64_t expected = std::int64_t{1} << (n / 2);
  if (sum != expected && sum != -expected) fail(ErrorCode::Internal, "quadratic form is singular mod 2");
  return sum > 0 ? 0 : 1;
}

int arf_murasugi(const LaurentPoly& alexander) {
  if (alexander.is_zero()) fail(ErrorCode::InvalidAlexander, "zero Alexander polynomial");
  Rational one = alexander.evaluate(1);
  if (one != 1 && one != -1) fail(ErrorCode::InvalidAlexander, "Alexander polynomial must have p(1) = +-1");
  BigInt r = numerator(alexander.evaluate(-1)) % 8;
  if (r < 0) r += 8;
  return (r == 1 || r == 7) ? 0 : 1;
}

LevineTristram levine_tristram(const SeifertMatrix& v, const Rational& angle) {
  Rational frac = angle - Rational(floor_div(angle));
  if (frac == 0) fail(ErrorCode::Domain, "Levine-Tristram signature undefined at w = 1");
  const BigInt m = denominator(frac);
  if (m > 100000) fail(ErrorCode::Budget, "angle denominator too large for cyclotomic test");

  LevineTristram result;
  if (v.size() == 0) return result;

  // The form equals (1 - w)(V - conj(w) V^T); it is singular iff Delta(w) = 0,
  // i.e. iff Phi_m divides the normalized Alexander polynomial.
  IntPoly delta = normalize(alexander(v)).poly;
  if (remainder_monic(delta, cyclotomic(m.convert_to<int>())).is_zero()) {
    result.singular = true;
    return result;
  }

  const double theta = 2.0 * std::numbers::pi * numerator(frac).convert_to<double>() / m.convert_to<double>();
  const std::complex<double> w = std::polar(1.0, theta);
  const int n = v.size();
  Eigen::MatrixXcd h(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      h(i, j) = (1.0 - w) * static_cast<double>(v.at(i, j)) + (1.0 - std::conj(w)) * static_cast<double>(v.at(j, i));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  for (int i = 0; i < n; ++i) {
    const double lambda = solver.eigenvalues()(i);
    if (std::abs(lambda) < 1e-9) fail(ErrorCode::Domain, "Hermitian form numerically singular");
    result.signature += lambda > 0 ? 1 : -1;
  }
  return result;
}

GenusBounds genus_bounds_from_matrix(const SeifertMatrix& v) {
  const std::int64_t sig = signature(v);
  const std::int64_t g = v.genus();
  const std::int64_t lower = (sig < 0 ? -sig : sig) / 2;
  GenusBounds b;
  b.g4 = {lower, g};
  b.g3 = Interval{lower, g};
  b.gamma4 = {1, 2 * g + 1};
  return b;
}

}  // namespace slicegate
