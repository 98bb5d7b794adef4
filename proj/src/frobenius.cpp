#include "fblow/frobenius.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "fblow/enumerate.hpp"

namespace fblow {

std::string PredicateVerdict::witness_text() const {
  if (!witness) return {};
  Int g = denominator;
  for (Int c : witness->coords()) g = std::gcd(g, c);
  LatticeVector num = *witness;
  for (std::size_t i = 0; i < num.dim(); ++i) num[i] /= g;
  Int den = denominator / g;
  std::string s = to_string(num);
  if (den != 1) s += "/" + std::to_string(den);
  return s;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int k = 2; k <= n / k; ++k)
    if (n % k == 0) return false;
  return true;
}

FrobeniusLevel::FrobeniusLevel(Int p, int e) : p_(p), e_(e) {
  if (!is_prime(p)) throw ValidationError("p = " + std::to_string(p) + " is not prime");
  if (e < 0) throw ValidationError("e must be nonnegative");
  q_ = checked_pow(p, static_cast<unsigned>(e));
}

LatticeVector StandardSet::coset_label(const LatticeVector& a) const {
  LatticeVector label = a;
  for (std::size_t i = 0; i < label.dim(); ++i) label[i] = floor_mod(label[i], level.q());
  return label;
}

const LatticeVector& StandardSet::rep_of(const LatticeVector& a) const { return reps.at(coset_label(a)); }

std::vector<LatticeVector> StandardSet::elements() const {
  std::vector<LatticeVector> out;
  for (const auto& [label, rep] : reps) out.push_back(rep);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void require_interior(const AffineMonoid& A, const Weight& w) {
  if (w.covector.dim() != A.dim()) throw ValidationError("weight dimension does not match the monoid");
  for (const auto& g : A.generators())
    if (dot(g, w.covector) <= 0)
      throw ValidationError("weight " + to_string(w.covector) + " is not interior to the dual cone");
}

// Enumeration core; assumes the standing assumptions were validated.
StandardSet standard_set_unchecked(const AffineMonoid& A, const FrobeniusLevel& level, const Weight& w) {
  require_interior(A, w);
  const Int cosets = checked_pow(level.q(), static_cast<unsigned>(A.dim()));
  StandardSet s{level, w, {}, 0};
  GradedEnumerator en(A.generators(), w.covector);
  std::map<LatticeVector, Int> rep_weight;
  Int filled = 0;
  for (;;) {
    if (filled == cosets && en.peek_weight() > s.bound) break;
    const auto& item = en.next();
    LatticeVector label = s.coset_label(item.element);
    auto it = rep_weight.find(label);
    if (it == rep_weight.end()) {
      rep_weight.emplace(label, item.weight);
      s.reps.emplace(label, item.element);
      s.bound = std::max(s.bound, item.weight);
      ++filled;
    } else if (it->second == item.weight) {
      throw WeightNotGeneric("weight " + to_string(w.covector) + " ties " + to_string(s.reps.at(label)) + " and " +
                             to_string(item.element) + " in one coset mod " + std::to_string(level.q()));
    }
  }
  return s;
}

}  // namespace

StandardSet standard_set(const AffineMonoid& A, const FrobeniusLevel& level, const Weight& w) {
  validate_standing_assumptions(A);
  return standard_set_unchecked(A, level, w);
}

bool b_contains(const AffineMonoid& A, const StandardSet& s, const LatticeVector& a) {
  return monoid_contains(A, a) && s.rep_of(a) != a;
}

Weight default_weight(const AffineMonoid& A, const FrobeniusLevel& level) {
  validate_standing_assumptions(A);
  RationalCone dual = dual_cone(A);
  LatticeVector base = LatticeVector::zero(A.dim());
  for (const auto& r : dual.rays) base += r;
  std::vector<LatticeVector> candidates{base};
  for (Int k = 2; k <= 64; k *= 2)
    for (const auto& r : dual.rays) candidates.push_back(k * base + r);
  for (const auto& c : candidates) {
    try {
      standard_set_unchecked(A, level, Weight{c});
      return Weight{c};
    } catch (const WeightNotGeneric&) {
    }
  }
  throw WeightNotGeneric("no generic default weight found near " + to_string(base));
}

ChartMonoid chart_monoid(const AffineMonoid& A, const FrobeniusLevel& level, const Weight& w,
                         std::optional<Int> degree_bound) {
  return chart_monoid(A, standard_set(A, level, w), degree_bound);
}

ChartMonoid chart_monoid(const AffineMonoid& A, const StandardSet& s, std::optional<Int> degree_bound) {
  const Int q = s.level.q();
  const LatticeVector& w = s.weight.covector;
  Int cutoff;
  std::optional<Int> complete_up_to;
  if (A.dim() == 1) {
    // Every n >= conductor lies in A, so the differences cover all integers
    // >= K; hence each minimal generator is < 2K and comes from an element
    // of weight <= T + q (2K - 1).
    const Int c = conductor(A);
    Int k = 1;
    for (const auto& [label, rep] : s.reps) {
      Int r = rep[0] < 0 ? -rep[0] : rep[0];
      if (c > r) k = std::max(k, (c - r + q - 1) / q);
    }
    Int unit = w[0] < 0 ? -w[0] : w[0];
    cutoff = checked_add(s.bound, checked_mul(checked_mul(q, checked_sub(checked_mul(2, k), 1)), unit));
  } else {
    Int extra = 0;
    if (degree_bound) {
      extra = *degree_bound;
    } else {
      for (const auto& g : A.generators()) extra = std::max(extra, dot(g, w));
      extra = checked_mul(4, extra);
    }
    cutoff = checked_add(checked_mul(2, s.bound), extra);
    complete_up_to = cutoff;
  }

  GradedEnumerator en(A.generators(), w);
  en.settle_through(cutoff);
  std::unordered_set<LatticeVector, LatticeVectorHash> differences;
  for (const auto& item : en.settled()) {
    const LatticeVector& rep = s.rep_of(item.element);
    if (rep == item.element) continue;
    LatticeVector c = item.element - rep;
    for (std::size_t i = 0; i < c.dim(); ++i) c[i] /= q;
    differences.insert(std::move(c));
  }
  std::vector<LatticeVector> diffs(differences.begin(), differences.end());
  return ChartMonoid{s.level, s.weight, minimal_generating_set(diffs, w), complete_up_to};
}

std::vector<LatticeVector> minimal_generators(std::span<const LatticeVector> gens) {
  if (gens.empty()) return {};
  auto w = positive_covector(gens.front().dim(), gens);
  if (!w) throw NotPointed();
  return minimal_generating_set(gens, *w);
}

PredicateVerdict is_smooth_chart(const ChartMonoid& c) {
  PredicateVerdict v;
  const std::size_t d = c.weight.covector.dim();
  v.value = c.generators.size() == d && lattice_index(d, c.generators) == 1;
  v.certified = c.certified();
  v.checked_bound = c.complete_up_to;
  return v;
}

}  // namespace fblow
