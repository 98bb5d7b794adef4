#pragma once

#include <optional>
#include <string>

#include "fblow/lattice.hpp"

namespace fblow {

/// Outcome of a yes/no question about a monoid.
///
/// A witness is the numerator of a counterexample m = witness / denominator.
/// When present the value is false and the witness can be re-checked
/// against the defining condition. checked_bound records how far a bounded
/// search went when the answer is not certified.
struct PredicateVerdict {
  bool value = true;
  bool certified = true;
  std::optional<LatticeVector> witness;
  Int denominator = 1;
  std::optional<Int> checked_bound;

  /// Witness as a reduced fraction, e.g. "3/2" or "(1,1)/2".
  std::string witness_text() const;
};

}  // namespace fblow
