#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fblow/frobenius.hpp"

namespace fblow {

/// One maximal cone of the dual cone on which the standard set is constant.
struct Chamber {
  RationalCone cone;
  Weight sample;
  StandardSet standard;
  ChartMonoid chart;
};

struct ChamberFan {
  FrobeniusLevel level;
  /// For d = 2, ordered from the first dual ray to the second.
  std::vector<Chamber> chambers;
  bool certified = false;
};

struct FanOptions {
  std::optional<Int> degree_bound;
  /// Independent interior samples re-checked per chamber.
  int verification_samples = 1;
};

/// Chamber decomposition of the dual cone at one Frobenius level.
///
/// d = 1 is a single chamber. For d = 2 each chamber is computed exactly:
/// the competitor constraints found by enumeration are checked at both
/// boundary directions (by graded enumeration at interior walls, by a
/// residue-class count along the facet at the dual-cone rays), and the sweep
/// crosses every wall until both dual rays are reached.
/// Throws DimensionUnsupported for d >= 3.
ChamberFan compute_fan(const AffineMonoid& A, const FrobeniusLevel& level, const FanOptions& options = {});

/// Exact chamber of the standard set at weight w (d = 2 only).
Chamber chamber_at(const AffineMonoid& A, const FrobeniusLevel& level, const Weight& w,
                   std::optional<Int> degree_bound = std::nullopt);

/// Strictly interior integer weights of a chamber, distinct from its sample.
std::vector<Weight> interior_samples(const Chamber& c, int count);

/// Index of the chamber of fan whose cone contains cone.
std::optional<std::size_t> containing_chamber(const ChamberFan& fan, const RationalCone& cone);

/// Every chamber of finer lies in some chamber of coarser.
/// Throws UncertifiedInput when either fan is uncertified.
bool refines(const ChamberFan& finer, const ChamberFan& coarser);

struct DominationVerdict {
  bool value = true;
  bool certified = true;
  bool refinement_failure = false;
  std::optional<std::size_t> higher_chamber;
  std::optional<std::size_t> lower_chamber;
  /// Generator of the lower chart missing from the higher chart monoid.
  std::optional<LatticeVector> missing_generator;

  std::string describe() const;
};

/// The blowup at the higher level dominates the lower one: the fans refine
/// and on each pair of nested chambers the lower chart monoid is contained
/// in the higher one. Throws UncertifiedInput for uncertified fans.
DominationVerdict dominates(const ChamberFan& higher, const ChamberFan& lower);

}  // namespace fblow
