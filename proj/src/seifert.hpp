#pragma once

#include "bounds.hpp"
#include "laurent.hpp"
#include "numeric.hpp"

#include <cstdint>
#include <vector>

namespace slicegate {

/// Square integer matrix V of even size with V - V^T unimodular.
/// The 0x0 matrix is the unknot.
class SeifertMatrix {
 public:
  using Entries = std::vector<std::vector<std::int64_t>>;

  SeifertMatrix() = default;

  /// Throws InvalidArgument unless square, even-sized and det(V - V^T) = +-1.
  static SeifertMatrix create(Entries entries);

  int size() const { return static_cast<int>(entries_.size()); }
  int genus() const { return size() / 2; }
  std::int64_t at(int i, int j) const { return entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const Entries& entries() const { return entries_; }

  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

 private:
  explicit SeifertMatrix(Entries entries) : entries_(std::move(entries)) {}
  Entries entries_;
};

using IntMatrix = std::vector<std::vector<BigInt>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Fraction-free (Bareiss) determinant.
BigInt determinant(IntMatrix m);

/// det(V - V^T); used by validation.
BigInt skew_determinant(const SeifertMatrix::Entries& entries);

/// Signature of a symmetric rational matrix by congruence diagonalization.
int symmetric_signature(RationalMatrix a);

int signature(const SeifertMatrix& v);

/// det(V - t V^T), centered and signed so that p(1/t) = p(t) and p(1) = 1.
LaurentPoly alexander(const SeifertMatrix& v);

/// |det(V + V^T)|.
BigInt determinant(const SeifertMatrix& v);

inline constexpr int kMaxArfSize = 24;

/// Arf invariant of x -> x V x^T over GF(2) via the Gauss sum.
int arf(const SeifertMatrix& v);

/// 0 iff p(-1) = +-1 mod 8. Requires p(1) = +-1.
int arf_murasugi(const LaurentPoly& alexander);

struct LevineTristram {
  bool singular = false;
  int signature = 0;  // meaningful only when !singular
};

/// Signature of (1 - w) V + (1 - conj w) V^T at w = exp(2 pi i * angle).
/// Singularity is decided exactly through cyclotomic divisibility; the
/// signature itself is an eigenvalue count in double precision.
LevineTristram levine_tristram(const SeifertMatrix& v, const Rational& angle);

/// Bounds read off a single Seifert surface and its signature.
GenusBounds genus_bounds_from_matrix(const SeifertMatrix& v);

}  // namespace slicegate
