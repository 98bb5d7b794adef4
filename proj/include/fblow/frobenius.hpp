#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "fblow/lattice.hpp"
#include "fblow/verdict.hpp"

namespace fblow {

/// (p, e) with q = p^e.
class FrobeniusLevel {
 public:
  /// Throws ValidationError unless p is prime and p^e fits.
  FrobeniusLevel(Int p, int e);

  Int p() const { return p_; }
  int e() const { return e_; }
  Int q() const { return q_; }
  FrobeniusLevel next() const { return FrobeniusLevel(p_, e_ + 1); }

  friend bool operator==(const FrobeniusLevel&, const FrobeniusLevel&) = default;

 private:
  Int p_;
  int e_;
  Int q_;
};

bool is_prime(Int n);

/// Weight-minimal representatives of the cosets of qM meeting A.
///
/// Elements of (1/q)A are stored scaled: the integer vector a in A stands for
/// the fraction a/q. reps maps each coset label (a mod q, coordinates in
/// [0, q)) to its unique lightest element.
struct StandardSet {
  FrobeniusLevel level;
  Weight weight;
  std::map<LatticeVector, LatticeVector> reps;
  /// max <rep, w>; every element of A not listed is heavier than its rep.
  Int bound = 0;

  LatticeVector coset_label(const LatticeVector& a) const;
  const LatticeVector& rep_of(const LatticeVector& a) const;
  /// Reps sorted lexicographically.
  std::vector<LatticeVector> elements() const;

  /// Same level and same representatives (weights may differ).
  bool same_reps(const StandardSet& other) const { return level == other.level && reps == other.reps; }
};

StandardSet standard_set(const AffineMonoid& A, const FrobeniusLevel& level, const Weight& w);

/// a/q lies in B: a is in A and is not the representative of its coset.
bool b_contains(const AffineMonoid& A, const StandardSet& s, const LatticeVector& a);

/// Sum of the dual-cone rays, perturbed deterministically until it is
/// generic for level.
Weight default_weight(const AffineMonoid& A, const FrobeniusLevel& level);

/// Minimal generating set of the monoid generated by the differences
/// (m - m')/q, m' a representative, m heavier in the same coset.
struct ChartMonoid {
  FrobeniusLevel level;
  Weight weight;
  std::vector<LatticeVector> generators;
  /// Enumeration cutoff (scaled weight) when generation is not proven complete.
  std::optional<Int> complete_up_to;

  bool certified() const { return !complete_up_to.has_value(); }
};

ChartMonoid chart_monoid(const AffineMonoid& A, const FrobeniusLevel& level, const Weight& w,
                         std::optional<Int> degree_bound = std::nullopt);

/// Shares the computed standard set instead of recomputing it.
ChartMonoid chart_monoid(const AffineMonoid& A, const StandardSet& s, std::optional<Int> degree_bound = std::nullopt);

/// The unique minimal generating set, sorted by weight then lexicographically.
/// Throws NotPointed when the generated monoid contains a line.
std::vector<LatticeVector> minimal_generators(std::span<const LatticeVector> gens);

/// Free monoid on a Z^d basis. Not certified when the chart is bound-flagged.
PredicateVerdict is_smooth_chart(const ChartMonoid& c);

}  // namespace fblow
