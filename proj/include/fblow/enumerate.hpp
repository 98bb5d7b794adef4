#pragma once

#include <queue>
#include <unordered_set>
#include <vector>

#include "fblow/lattice.hpp"

namespace fblow {

/// Lists the elements of a monoid in increasing <., w> order, ties broken
/// lexicographically on coordinates. w must be strictly positive on every
/// generator, which makes each weight level finite.
///
/// Every element of weight <= settled_weight() has been produced; membership
/// queries below that bound are therefore exact.
class GradedEnumerator {
 public:
  struct Item {
    LatticeVector element;
    Int weight;
  };

  GradedEnumerator(std::vector<LatticeVector> generators, LatticeVector weight);

  /// Produces the next element. The monoid is infinite, so this never runs dry.
  const Item& next();
  Int peek_weight() const { return frontier_.top().weight; }

  /// Settles every element of weight <= bound.
  void settle_through(Int bound);
  /// Largest weight w such that every element of weight <= w is settled.
  Int settled_weight() const { return checked_sub(peek_weight(), 1); }

  const std::vector<Item>& settled() const { return settled_; }
  const LatticeVector& weight() const { return weight_; }

  bool contains(const LatticeVector& v);

 private:
  struct Later {
    bool operator()(const Item& a, const Item& b) const {
      if (a.weight != b.weight) return a.weight > b.weight;
      return a.element > b.element;
    }
  };

  std::vector<LatticeVector> generators_;
  std::vector<Int> generator_weights_;
  LatticeVector weight_;
  std::priority_queue<Item, std::vector<Item>, Later> frontier_;
  std::unordered_set<LatticeVector, LatticeVectorHash> discovered_;
  std::vector<Item> settled_;
};

}  // namespace fblow
