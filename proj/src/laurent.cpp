#include "laurent.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace slicegate {

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::constant(const BigInt& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const BigInt& c, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<BigInt, int>>& terms) {
  LaurentPoly p;
  for (const auto& [c, e] : terms) p.add_term(e, c);
  return p;
}

void LaurentPoly::add_term(int exponent, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

BigInt LaurentPoly::coefficient(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::min_exponent() const {
  if (coeffs_.empty()) fail(ErrorCode::Domain, "zero polynomial has no exponents");
  return coeffs_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (coeffs_.empty()) fail(ErrorCode::Domain, "zero polynomial has no exponents");
  return coeffs_.rbegin()->first;
}

LaurentPoly LaurentPoly::involute() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(-e, c);
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e + k, c);
  return r;
}

Rational LaurentPoly::evaluate(const BigInt& x) const {
  if (x == 0) fail(ErrorCode::Domain, "Laurent polynomial evaluated at zero");
  Rational sum = 0;
  for (const auto& [e, c] : coeffs_) {
    BigInt power = boost::multiprecision::pow(abs(x), static_cast<unsigned>(e < 0 ? -e : e));
    if (x < 0 && (e % 2 != 0)) power = -power;
    sum += e >= 0 ? Rational(c * power) : make_rational(c, power);
  }
  return sum;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [e, c] : b.coeffs_) r.add_term(e, c);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

namespace {

std::string format_terms(const std::vector<std::pair<BigInt, int>>& high_to_low) {
  if (high_to_low.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, e] : high_to_low) {
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str();
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string LaurentPoly::to_string() const {
  std::vector<std::pair<BigInt, int>> terms;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) terms.emplace_back(it->second, it->first);
  return format_terms(terms);
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
LaurentPoly involute(const LaurentPoly& p) { return p.involute(); }
Rational evaluate_int(const LaurentPoly& p, const BigInt& x) { return p.evaluate(x); }

// -------------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::from_laurent(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  if (p.min_exponent() < 0) fail(ErrorCode::Domain, "negative exponent in ordinary polynomial");
  std::vector<BigInt> c(static_cast<std::size_t>(p.max_exponent()) + 1, BigInt(0));
  for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e)] = v;
  return IntPoly(std::move(c));
}

BigInt IntPoly::at(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

BigInt IntPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) g = gcd(g, c);
  return g;
}

IntPoly IntPoly::reciprocal() const {
  std::vector<BigInt> r(coeffs_.rbegin(), coeffs_.rend());
  IntPoly p(std::move(r));
  if (!p.is_zero() && p.leading() < 0) return p.negated();
  return p;
}

IntPoly IntPoly::negated() const {
  std::vector<BigInt> r = coeffs_;
  for (auto& c : r) c = -c;
  return IntPoly(std::move(r));
}

LaurentPoly IntPoly::to_laurent() const {
  std::vector<std::pair<BigInt, int>> terms;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) terms.emplace_back(coeffs_[i], static_cast<int>(i));
  return LaurentPoly::from_terms(terms);
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> r(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> r(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] -= b.coeffs_[i];
  return IntPoly(std::move(r));
}

bool operator<(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(), b.coeffs_.end());
}

std::string IntPoly::to_string() const {
  std::vector<std::pair<BigInt, int>> terms;
  for (int i = degree(); i >= 0; --i) {
    if (coeffs_[static_cast<std::size_t>(i)] != 0) terms.emplace_back(coeffs_[static_cast<std::size_t>(i)], i);
  }
  return format_terms(terms);
}

std::optional<IntPoly> exact_divide(const IntPoly& dividend, const IntPoly& divisor) {
  if (divisor.is_zero()) fail(ErrorCode::Domain, "division by the zero polynomial");
  if (dividend.is_zero()) return IntPoly{};
  if (dividend.degree() < divisor.degree()) return std::nullopt;
  std::vector<BigInt> rem = dividend.coeffs();
  const int dd = divisor.degree();
  std::vector<BigInt> quot(static_cast<std::size_t>(dividend.degree() - dd) + 1, BigInt(0));
  for (int k = dividend.degree() - dd; k >= 0; --k) {
    const BigInt& top = rem[static_cast<std::size_t>(k + dd)];
    if (top == 0) continue;
    if (top % divisor.leading() != 0) return std::nullopt;
    BigInt q = top / divisor.leading();
    quot[static_cast<std::size_t>(k)] = q;
    for (int i = 0; i <= dd; ++i) rem[static_cast<std::size_t>(k + i)] -= q * divisor.at(i);
  }
  for (const auto& c : rem) {
    if (c != 0) return std::nullopt;
  }
  return IntPoly(std::move(quot));
}

IntPoly remainder_monic(const IntPoly& dividend, const IntPoly& monic) {
  if (monic.is_zero() || monic.leading() != 1) fail(ErrorCode::Domain, "divisor is not monic");
  std::vector<BigInt> rem = dividend.coeffs();
  const int dd = monic.degree();
  for (int k = dividend.degree() - dd; k >= 0; --k) {
    BigInt top = rem[static_cast<std::size_t>(k + dd)];
    if (top == 0) continue;
    for (int i = 0; i <= dd; ++i) rem[static_cast<std::size_t>(k + i)] -= top * monic.at(i);
  }
  return IntPoly(std::move(rem));
}

// ------------------------------------------------------------- normalization

Normalized normalize(const LaurentPoly& p) {
  if (p.is_zero()) fail(ErrorCode::InvalidArgument, "cannot normalize the zero polynomial");
  Normalized n;
  n.unit.shift = p.min_exponent();
  n.poly = IntPoly::from_laurent(p.shifted(-n.unit.shift));
  if (n.poly.leading() < 0) {
    n.poly = n.poly.negated();
    n.unit.sign = -1;
  }
  return n;
}

bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return normalize(a).poly == normalize(b).poly;
}

// ------------------------------------------------------------- factorization

namespace {

constexpr std::uint64_t kDivisorLimit = 1'000'000'000'000'000'000ULL;

std::uint64_t to_magnitude(const BigInt& v) {
  BigInt m = abs(v);
  if (m > kDivisorLimit) {
    fail(ErrorCode::Budget, "integer " + m.str() + " too large for divisor enumeration");
  }
  return m.convert_to<std::uint64_t>();
}

std::vector<std::uint64_t> positive_divisors(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> primes;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    int k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    primes.emplace_back(p, k);
  }
  if (m > 1) primes.emplace_back(m, 1);
  std::vector<std::uint64_t> divs{1};
  for (const auto& [p, k] : primes) {
    const std::size_t count = divs.size();
    std::uint64_t pk = 1;
    for (int i = 0; i < k; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < count; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

IntPoly linear(const BigInt& c0, const BigInt& c1) { return IntPoly({c0, c1}); }

IntPoly make_positive(IntPoly p) { return p.leading() < 0 ? p.negated() : p; }

/// Linear factor (q t - p) from a rational root p/q, if any.
std::optional<IntPoly> rational_root_factor(const IntPoly& f) {
  if (f.at(0) == 0) return linear(0, 1);
  const auto num_divs = positive_divisors(to_magnitude(f.at(0)));
  const auto den_divs = positive_divisors(to_magnitude(f.leading()));
  for (std::uint64_t q : den_divs) {
    for (std::uint64_t p : num_divs) {
      if (gcd(BigInt(p), BigInt(q)) != 1) continue;
      for (int sign : {1, -1}) {
        BigInt pp = sign * BigInt(p);
        if (f.evaluate(Rational(pp, BigInt(q))) == 0) return linear(-pp, BigInt(q));
      }
    }
  }
  return std::nullopt;
}

/// Coefficients (low to high) of the interpolating polynomial through the points.
std::vector<Rational> interpolate(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - level]);
    }
  }
  // Newton form to monomial basis, innermost factor first.
  std::vector<Rational> coeffs{dd[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    std::vector<Rational> next(coeffs.size() + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= coeffs[i] * Rational(xs[k]);
    }
    next[0] += dd[k];
    coeffs = std::move(next);
  }
  return coeffs;
}

/// Kronecker's method: a nontrivial factor of degree at most `d`.
std::optional<IntPoly> kronecker_factor(const IntPoly& f, int d) {
  struct Sample {
    BigInt x;
    BigInt value;
    std::vector<std::uint64_t> divisors;
  };
  std::vector<Sample> samples;
  const int radius = f.degree() + d + 4;
  for (int x = -radius; x <= radius; ++x) {
    BigInt v = f.evaluate(BigInt(x));
    if (v == 0) continue;
    samples.push_back({BigInt(x), v, positive_divisors(to_magnitude(v))});
  }
  if (static_cast<int>(samples.size()) < d + 1) return std::nullopt;
  std::stable_sort(samples.begin(), samples.end(), [](const Sample& a, const Sample& b) {
    return a.divisors.size() < b.divisors.size();
  });
  samples.resize(static_cast<std::size_t>(d) + 1);

  std::vector<BigInt> xs;
  for (const auto& s : samples) xs.push_back(s.x);
  std::vector<BigInt> ys(samples.size());

  // Odometer over signed divisor choices; the first value's sign is fixed.
  std::vector<std::size_t> index(samples.size(), 0);
  auto choices = [&](std::size_t i) { return samples[i].divisors.size() * (i == 0 ? 1 : 2); };
  constexpr std::uint64_t kCandidateBudget = 50'000'000;
  std::uint64_t visited = 0;
  while (true) {
    if (++visited > kCandidateBudget) fail(ErrorCode::Budget, "Kronecker candidate budget exhausted");
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const std::size_t n = samples[i].divisors.size();
      const std::size_t k = index[i];
      BigInt v(samples[i].divisors[k % n]);
      ys[i] = (k >= n) ? BigInt(-v) : v;
    }
    auto coeffs = interpolate(xs, ys);
    bool integral = std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return is_integer(c); });
    if (integral) {
      std::vector<BigInt> ic;
      for (const auto& c : coeffs) ic.push_back(numerator(c));
      IntPoly g(std::move(ic));
      if (g.degree() >= 1 && g.degree() < f.degree()) {
        if (exact_divide(f, g)) return make_positive(g);
      }
    }
    std::size_t pos = 0;
    while (pos < index.size()) {
      if (++index[pos] < choices(pos)) break;
      index[pos] = 0;
      ++pos;
    }
    if (pos == index.size()) break;
  }
  return std::nullopt;
}

void split(const IntPoly& f, std::vector<IntPoly>& out) {
  if (f.degree() <= 1) {
    out.push_back(make_positive(f));
    return;
  }
  if (f.degree() == 2) {
    const BigInt& a = f.at(2);
    const BigInt& b = f.at(1);
    const BigInt& c = f.at(0);
    BigInt root = exact_sqrt(b * b - 4 * a * c);
    if (root < 0) {
      out.push_back(make_positive(f));
      return;
    }
    // a t^2 + b t + c = a (t - r1)(t - r2), r = (-b +- root) / 2a.
    for (const BigInt& s : {root, BigInt(-root)}) {
      BigInt num = -b + s;
      BigInt den = 2 * a;
      BigInt g = gcd(num, den);
      IntPoly lin = make_positive(linear(-(num / g), den / g));
      out.push_back(lin);
    }
    return;
  }
  if (auto lin = rational_root_factor(f)) {
    out.push_back(make_positive(*lin));
    split(*exact_divide(f, *lin), out);
    return;
  }
  if (f.degree() == 3) {
    out.push_back(make_positive(f));
    return;
  }
  if (f.degree() > kMaxFactorDegree) {
    fail(ErrorCode::Budget, "factorization limited to degree " + std::to_string(kMaxFactorDegree) +
                                " (got " + std::to_string(f.degree()) + ")");
  }
  for (int d = 2; d <= f.degree() / 2; ++d) {
    if (auto g = kronecker_factor(f, d)) {
      split(*g, out);
      split(*exact_divide(f, *g), out);
      return;
    }
  }
  out.push_back(make_positive(f));
}

}  // namespace

Factorization factor(const IntPoly& q) {
  if (q.is_zero()) fail(ErrorCode::InvalidArgument, "cannot factor the zero polynomial");
  Factorization result;
  result.content = q.content();
  if (q.leading() < 0) result.content = -result.content;
  std::vector<BigInt> prim;
  for (const auto& c : q.coeffs()) prim.push_back(c / result.content);
  IntPoly f(std::move(prim));
  if (f.degree() >= 1) split(f, result.factors);
  std::sort(result.factors.begin(), result.factors.end());
  return result;
}

// ------------------------------------------------------------------ Fox-Milnor

FoxMilnorResult fox_milnor(const LaurentPoly& p) {
  if (p.is_zero()) fail(ErrorCode::InvalidAlexander, "the zero polynomial is not an Alexander polynomial");
  Rational at_one = p.evaluate(1);
  if (at_one != 1 && at_one != -1) {
    fail(ErrorCode::InvalidAlexander, "Alexander polynomial must satisfy p(1) = +-1, got " + to_string(at_one));
  }
  FoxMilnorResult result;
  BigInt at_minus_one = abs(numerator(p.evaluate(-1)));
  BigInt root = exact_sqrt(at_minus_one);
  if (at_minus_one % 2 == 0 || root < 0) {
    result.reason = "|p(-1)| = " + at_minus_one.str() + " is not an odd perfect square";
    return result;
  }

  Normalized n = normalize(p);
  Factorization fac = factor(n.poly);
  BigInt content_root = exact_sqrt(fac.content);
  if (content_root < 0) {
    result.reason = "content " + fac.content.str() + " is not a perfect square";
    return result;
  }

  std::map<IntPoly, int> counts;
  for (const auto& g : fac.factors) ++counts[g];

  IntPoly witness({content_root});
  for (auto& [g, m] : counts) {
    if (m == 0) continue;
    IntPoly r = g.reciprocal();
    if (r == g) {
      if (m % 2 != 0) {
        result.reason = "self-reciprocal factor " + g.to_string() + " has odd multiplicity";
        return result;
      }
      for (int i = 0; i < m / 2; ++i) witness = witness * g;
      m = 0;
      continue;
    }
    auto partner = counts.find(r);
    if (partner == counts.end() || partner->second != m) {
      result.reason = "factor " + g.to_string() + " has no reciprocal partner of equal multiplicity";
      return result;
    }
    // Prefer the member of the pair with the dominant leading coefficient.
    const bool keep_g = abs(g.leading()) > abs(g.at(0)) ||
                        (abs(g.leading()) == abs(g.at(0)) && !(r < g));
    const IntPoly& rep = keep_g ? g : r;
    for (int i = 0; i < m; ++i) witness = witness * rep;
    partner->second = 0;
    m = 0;
  }

  LaurentPoly f = witness.to_laurent();
  if (!equal_up_to_unit(f * f.involute(), p)) {
    fail(ErrorCode::Internal, "Fox-Milnor witness does not reproduce the polynomial");
  }
  result.passes = true;
  result.witness = f;
  result.reason = "p = f(t) f(t^-1) up to a unit with f = " + f.to_string();
  return result;
}

IntPoly cyclotomic(int m) {
  if (m < 1) fail(ErrorCode::InvalidArgument, "cyclotomic index must be positive");
  std::vector<BigInt> c(static_cast<std::size_t>(m) + 1, BigInt(0));
  c[0] = -1;
  c[static_cast<std::size_t>(m)] = 1;
  IntPoly p(std::move(c));
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = *exact_divide(p, cyclotomic(d));
  }
  return p;
}

}  // namespace slicegate
