#include "fblow/enumerate.hpp"

#include <algorithm>

namespace fblow {

GradedEnumerator::GradedEnumerator(std::vector<LatticeVector> generators, LatticeVector weight)
    : generators_(std::move(generators)), weight_(std::move(weight)) {
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
  for (const auto& g : generators_) {
    Int w = dot(g, weight_);
    if (w <= 0) throw ValidationError("grading weight " + to_string(weight_) + " is not positive on generator " + to_string(g));
    generator_weights_.push_back(w);
  }
  LatticeVector zero = LatticeVector::zero(weight_.dim());
  discovered_.insert(zero);
  frontier_.push({zero, 0});
}

const GradedEnumerator::Item& GradedEnumerator::next() {
  Item item = frontier_.top();
  frontier_.pop();
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    LatticeVector succ = item.element + generators_[i];
    if (discovered_.insert(succ).second) frontier_.push({succ, checked_add(item.weight, generator_weights_[i])});
  }
  settled_.push_back(std::move(item));
  return settled_.back();
}

void GradedEnumerator::settle_through(Int bound) {
  while (peek_weight() <= bound) next();
}

bool GradedEnumerator::contains(const LatticeVector& v) {
  Int w = dot(v, weight_);
  if (w < 0) return false;
  settle_through(w);
  return discovered_.contains(v);
}

}  // namespace fblow
