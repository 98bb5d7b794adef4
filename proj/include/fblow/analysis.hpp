#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fblow/fan.hpp"
#include "fblow/verdict.hpp"

namespace fblow {

/// Every m in M with p*m in A lies in A.
///
/// d = 1 is decided below the conductor and certified. For d >= 2 the search
/// covers <m, w0> <= bound (default 6 x max generator weight); a found
/// witness is always conclusive, a clean search is certified only when A is
/// certified normal.
PredicateVerdict is_weakly_normal(const AffineMonoid& A, Int p, std::optional<Int> bound = std::nullopt);

/// For monoid algebras F-purity coincides with weak normality.
PredicateVerdict is_F_pure(const AffineMonoid& A, Int p, std::optional<Int> bound = std::nullopt);

/// A equals its saturation; witness = a Hilbert basis element missing from A.
PredicateVerdict is_normal(const AffineMonoid& A);

/// Compares the standard set at level e with the level e + 1 standard set
/// restricted to (1/p^e)A, at the torus-fixed point of the chart of high.
/// Scaled to denominator p^(e+1): p * S_e == S_(e+1) ∩ pA.
/// high must lie at level e + 1 inside low at level e.
PredicateVerdict condition_star(const AffineMonoid& A, Int p, int e, const Chamber& high, const Chamber& low);

struct SequenceOptions {
  /// Largest admissible e_max; defaults to 6 for d = 1 and 3 for d = 2.
  std::optional<int> e_limit;
  std::optional<Int> degree_bound;
};

struct LevelResult {
  int e;
  std::optional<ChamberFan> fan;
  std::string error;
};

struct ChamberStar {
  std::size_t high_chamber;
  std::optional<std::size_t> low_chamber;
  /// Absent when no lower chamber contains the higher one.
  std::optional<PredicateVerdict> verdict;
};

struct StepReport {
  int from_e;
  std::optional<DominationVerdict> dominates;
  std::vector<ChamberStar> condition_star;
  std::string error;

  /// Condition (*) was evaluated and holds on every chamber.
  bool condition_star_holds() const;
};

struct SequenceReport {
  AffineMonoid monoid;
  Int p;
  std::vector<LevelResult> levels;
  std::vector<StepReport> steps;
  /// Smallest e0 < e_max from which every computed level repeats. An
  /// observation about the computed range only.
  std::optional<int> stabilized_at;
  /// d = 1 only: the repeated chart is the normalization and p^e_max exceeds
  /// the conductor, which pins every later chart as well.
  bool stabilization_certified = false;
  PredicateVerdict weakly_normal;
  PredicateVerdict f_pure;
  PredicateVerdict normal;
};

/// Same chamber cones and chart generators.
bool same_blowup(const ChamberFan& a, const ChamberFan& b);

SequenceReport analyze_sequence(const AffineMonoid& A, Int p, int e_max, const SequenceOptions& options = {});

}  // namespace fblow
