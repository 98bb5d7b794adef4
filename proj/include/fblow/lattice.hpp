#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fblow/errors.hpp"

namespace fblow {

using Int = std::int64_t;

// Checked arithmetic. Lattice coordinates stay small in practice; any
// overflow is reported instead of wrapping.
inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow();
  return r;
}
inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow();
  return r;
}
inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow();
  return r;
}
/// Representative of a mod m in [0, m).
inline Int floor_mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}
Int checked_pow(Int base, unsigned exp);
Int gcd(Int a, Int b);

/// A point of M = Z^d (or of the dual lattice).
class LatticeVector {
 public:
  LatticeVector() = default;
  LatticeVector(std::initializer_list<Int> coords) : coords_(coords) {}
  explicit LatticeVector(std::vector<Int> coords) : coords_(std::move(coords)) {}

  static LatticeVector zero(std::size_t dim) { return LatticeVector(std::vector<Int>(dim, 0)); }

  std::size_t dim() const { return coords_.size(); }
  Int operator[](std::size_t i) const { return coords_[i]; }
  Int& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Int>& coords() const { return coords_; }
  bool is_zero() const;

  /// Divides out the gcd of the coordinates (zero stays zero).
  LatticeVector primitive() const;

  LatticeVector& operator+=(const LatticeVector& o);
  LatticeVector& operator-=(const LatticeVector& o);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator-(const LatticeVector& a);
  friend LatticeVector operator*(Int k, const LatticeVector& a);

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b) {
    return a.coords_ <=> b.coords_;
  }

 private:
  std::vector<Int> coords_;
};

Int dot(const LatticeVector& a, const LatticeVector& b);
std::string to_string(const LatticeVector& v);
std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

struct LatticeVectorHash {
  std::size_t operator()(const LatticeVector& v) const noexcept;
};

/// Integer covector used to grade the monoid; denominators already cleared.
struct Weight {
  LatticeVector covector;
  friend bool operator==(const Weight&, const Weight&) = default;
};

/// A finitely generated submonoid A of Z^d given by generators.
///
/// Construction checks only the local invariants (nonempty, consistent
/// dimension, no zero generator). The standing assumptions (group generation
/// and pointedness) are checked by validate_standing_assumptions().
class AffineMonoid {
 public:
  AffineMonoid(std::size_t dim, std::vector<LatticeVector> generators);
  static AffineMonoid numerical(std::initializer_list<Int> gens);

  std::size_t dim() const { return dim_; }
  const std::vector<LatticeVector>& generators() const { return generators_; }

 private:
  std::size_t dim_;
  std::vector<LatticeVector> generators_;
};

/// Polyhedral cone stored by its primitive extreme rays and inner facet normals.
struct RationalCone {
  std::vector<LatticeVector> rays;
  std::vector<LatticeVector> halfspaces;

  bool contains(const LatticeVector& u) const;
  bool strictly_contains(const LatticeVector& u) const;
  /// Cone containment decided on rays of *this against halfspaces of other.
  bool subset_of(const RationalCone& other) const;
  friend bool operator==(const RationalCone&, const RationalCone&) = default;
};

bool group_generates(const AffineMonoid& A);
/// Same test on a bare list of vectors of dimension dim.
bool group_generates(std::size_t dim, std::span<const LatticeVector> vectors);
/// |det| of the lattice spanned by the vectors, 0 when the rank is below dim.
/// Computed exactly via a Hermite reduction in arbitrary precision.
Int lattice_index(std::size_t dim, std::span<const LatticeVector> vectors);

/// Integer covector strictly positive on every vector, if one exists.
/// Found by exact rational Fourier-Motzkin elimination.
std::optional<LatticeVector> positive_covector(std::size_t dim, std::span<const LatticeVector> vectors);

bool is_pointed(const AffineMonoid& A);

/// Throws NotGroupGenerating / NotPointed.
void validate_standing_assumptions(const AffineMonoid& A);

/// Rays and facet normals of {u : <a,u> >= 0 for every generator a}.
/// Requires a pointed, group-generating monoid with d <= 3.
RationalCone dual_cone(const AffineMonoid& A);

/// The cone spanned by A itself (rays = primitive extreme directions).
RationalCone monoid_cone(const AffineMonoid& A);

/// Sum of the dual-cone rays; strictly positive on A \ {0}.
Weight interior_weight(const AffineMonoid& A);

bool monoid_contains(const AffineMonoid& A, const LatticeVector& target);

/// Irreducible elements of the monoid generated by vectors, sorted by
/// (<., weight>, lex). weight must be strictly positive on every vector.
std::vector<LatticeVector> minimal_generating_set(std::span<const LatticeVector> vectors,
                                                  const LatticeVector& weight);

struct SaturationResult {
  AffineMonoid monoid;
  bool certified;
};

/// Hilbert basis of A_R ∩ Z^d, collected from the half-open parallelepipeds
/// of every simplicial subcone spanned by extreme rays, then minimalized.
/// Exact whenever the cone can be computed (d <= 3).
SaturationResult saturation(const AffineMonoid& A);

/// Conductor of a one-dimensional monoid (numerical semigroup after a sign
/// flip): the least c with every n >= c (in the monoid's direction) contained.
Int conductor(const AffineMonoid& A);

}  // namespace fblow
