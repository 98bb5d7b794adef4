#include "fblow/fan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "fblow/enumerate.hpp"

namespace fblow {

namespace {

Int cross(const LatticeVector& a, const LatticeVector& b) {
  return checked_sub(checked_mul(a[0], b[1]), checked_mul(a[1], b[0]));
}

bool same_direction(const LatticeVector& a, const LatticeVector& b) {
  return a.primitive() == b.primitive();
}

// Chamber [left, right] of the angular sector between the dual rays first and
// second (cross(first, second) > 0) containing the generic weight w.
class ChamberSolver {
 public:
  ChamberSolver(const AffineMonoid& A, const StandardSet& s, const LatticeVector& first, const LatticeVector& second)
      : A_(A), s_(s), w_(s.weight.covector), first_(first), second_(second), left_(first), right_(second) {}

  void solve() {
    seed_constraints();
    for (;;) {
      std::vector<LatticeVector> found;
      for (const LatticeVector* end : {&left_, &right_}) {
        const LatticeVector& ray = (end == &left_) ? first_ : second_;
        auto v = (*end == ray) ? boundary_violations(ray) : wall_violations(*end);
        found.insert(found.end(), v.begin(), v.end());
      }
      if (found.empty()) return;
      for (const auto& c : found) apply(c);
    }
  }

  const LatticeVector& left() const { return left_; }
  const LatticeVector& right() const { return right_; }

 private:
  // Competitors inside the standard set's own enumeration window.
  void seed_constraints() {
    GradedEnumerator en(A_.generators(), w_);
    en.settle_through(checked_mul(2, s_.bound));
    for (const auto& item : en.settled()) {
      const auto& rep = s_.rep_of(item.element);
      if (rep != item.element) apply(item.element - rep);
    }
  }

  // Restricts to {u : <c, u> >= 0}; <c, w> > 0 always holds.
  void apply(const LatticeVector& c) {
    const Int cw = dot(c, w_);
    if (Int cr = dot(c, right_); cr < 0) right_ = (cw * right_ - cr * w_).primitive();
    if (Int cl = dot(c, left_); cl < 0) left_ = (cw * left_ - cl * w_).primitive();
  }

  // Elements lighter than their coset's representative at the interior
  // direction u.
  std::vector<LatticeVector> wall_violations(const LatticeVector& u) const {
    Int top = 0;
    for (const auto& [label, rep] : s_.reps) top = std::max(top, dot(rep, u));
    GradedEnumerator en(A_.generators(), u);
    std::vector<LatticeVector> out;
    while (en.peek_weight() < top) {
      const auto& item = en.next();
      const auto& rep = s_.rep_of(item.element);
      if (item.element != rep && item.weight < dot(rep, u)) out.push_back(item.element - rep);
    }
    return out;
  }

  // At a dual ray r the grading is only nonnegative. Elements of A with
  // <., r> = 0 form the facet monoid F, whose residues mod q form a subgroup
  // H; the smallest r-value reachable in a coset is found by dynamic
  // programming over residue classes mod H.
  std::vector<LatticeVector> boundary_violations(const LatticeVector& r) const {
    const Int q = s_.level.q();
    auto reduce = [&](LatticeVector v) {
      for (std::size_t i = 0; i < v.dim(); ++i) v[i] = floor_mod(v[i], q);
      return v;
    };
    std::vector<LatticeVector> facet, other;
    for (const auto& g : A_.generators()) (dot(g, r) == 0 ? facet : other).push_back(g);

    std::set<LatticeVector> subgroup{LatticeVector::zero(2)};
    std::vector<LatticeVector> stack{LatticeVector::zero(2)};
    while (!stack.empty()) {
      LatticeVector x = stack.back();
      stack.pop_back();
      for (const auto& g : facet) {
        LatticeVector y = reduce(x + g);
        if (subgroup.insert(y).second) stack.push_back(y);
      }
    }
    auto class_of = [&](const LatticeVector& label) {
      LatticeVector best;
      bool first = true;
      for (const auto& h : subgroup) {
        LatticeVector y = reduce(label + h);
        if (first || y < best) best = y;
        first = false;
      }
      return best;
    };

    Int top = 0;
    for (const auto& [label, rep] : s_.reps) top = std::max(top, dot(rep, r));
    // reach[s]: classes attained with r-value exactly s.
    std::vector<std::set<LatticeVector>> reach(static_cast<std::size_t>(top) + 1);
    std::map<LatticeVector, Int> first_value;
    reach[0].insert(class_of(LatticeVector::zero(2)));
    for (Int s = 0; s <= top; ++s) {
      for (const auto& cls : reach[s]) first_value.emplace(cls, s);
      for (const auto& g : other) {
        Int t = checked_add(s, dot(g, r));
        if (t > top) continue;
        for (const auto& cls : reach[s]) reach[t].insert(class_of(reduce(cls + g)));
      }
    }

    std::vector<LatticeVector> out;
    for (const auto& [label, rep] : s_.reps) {
      auto it = first_value.find(class_of(label));
      if (it == first_value.end() || it->second >= dot(rep, r)) continue;
      // Some element of this coset beats rep near r; find one by grading
      // with weights approaching r.
      for (Int k = 1;; k *= 2) {
        LatticeVector u = k * r + w_;
        const Int limit = dot(rep, u);
        GradedEnumerator en(A_.generators(), u);
        bool hit = false;
        while (!hit && en.peek_weight() < limit) {
          const auto& item = en.next();
          if (item.element != rep && s_.coset_label(item.element) == label) {
            out.push_back(item.element - rep);
            hit = true;
          }
        }
        if (hit) break;
        if (k > (Int{1} << 40)) throw Error("boundary competitor search did not terminate");
      }
    }
    return out;
  }

  const AffineMonoid& A_;
  const StandardSet& s_;
  LatticeVector w_;
  LatticeVector first_, second_;
  LatticeVector left_, right_;
};

RationalCone sector(const LatticeVector& left, const LatticeVector& right) {
  return RationalCone{{left, right}, {LatticeVector{-left[1], left[0]}, LatticeVector{right[1], -right[0]}}};
}

// Dual rays ordered counterclockwise.
std::pair<LatticeVector, LatticeVector> ordered_dual_rays(const AffineMonoid& A) {
  RationalCone dual = dual_cone(A);
  LatticeVector a = dual.rays.at(0), b = dual.rays.at(1);
  if (cross(a, b) < 0) std::swap(a, b);
  return {a, b};
}

Chamber solve_chamber(const AffineMonoid& A, const FrobeniusLevel& level, const Weight& w,
                      std::optional<Int> degree_bound) {
  auto [first, second] = ordered_dual_rays(A);
  StandardSet s = standard_set(A, level, w);
  ChamberSolver solver(A, s, first, second);
  solver.solve();
  ChartMonoid chart = chart_monoid(A, s, degree_bound);
  return Chamber{sector(solver.left(), solver.right()), w, std::move(s), std::move(chart)};
}

// Chamber adjacent to wall on the side of toward.
Chamber chamber_beyond(const AffineMonoid& A, const FrobeniusLevel& level, const LatticeVector& wall,
                       const LatticeVector& toward, bool moving_right, std::optional<Int> degree_bound) {
  for (Int k = 1; k <= (Int{1} << 40); k *= 2) {
    LatticeVector u = (k * wall + toward).primitive();
    try {
      Chamber c = solve_chamber(A, level, Weight{u}, degree_bound);
      const LatticeVector& near = moving_right ? c.cone.rays[0] : c.cone.rays[1];
      if (near == wall) return c;
    } catch (const WeightNotGeneric&) {
    }
  }
  throw Error("wall crossing at " + to_string(wall) + " did not converge");
}

}  // namespace

Chamber chamber_at(const AffineMonoid& A, const FrobeniusLevel& level, const Weight& w,
                   std::optional<Int> degree_bound) {
  if (A.dim() != 2) throw DimensionUnsupported("chamber_at is implemented for d = 2");
  return solve_chamber(A, level, w, degree_bound);
}

std::vector<Weight> interior_samples(const Chamber& c, int count) {
  std::vector<Weight> out;
  const auto& rays = c.cone.rays;
  if (rays.size() == 1) {
    for (Int k = 2; static_cast<int>(out.size()) < count; ++k) out.push_back(Weight{k * rays[0]});
    return out;
  }
  // Primitive combinations a*left + b*right, a, b > 0, by increasing a + b.
  for (Int n = 2; static_cast<int>(out.size()) < count; ++n) {
    for (Int a = 1; a < n && static_cast<int>(out.size()) < count; ++a) {
      if (gcd(a, n - a) != 1) continue;
      LatticeVector u = a * rays[0] + (n - a) * rays[1];
      if (!same_direction(u, c.sample.covector)) out.push_back(Weight{u});
    }
  }
  return out;
}

ChamberFan compute_fan(const AffineMonoid& A, const FrobeniusLevel& level, const FanOptions& options) {
  validate_standing_assumptions(A);
  ChamberFan fan{level, {}, true};
  if (A.dim() == 1) {
    RationalCone dual = dual_cone(A);
    Weight w{dual.rays[0]};
    StandardSet s = standard_set(A, level, w);
    ChartMonoid chart = chart_monoid(A, s, options.degree_bound);
    fan.chambers.push_back(Chamber{dual, w, std::move(s), std::move(chart)});
    return fan;
  }
  if (A.dim() != 2)
    throw DimensionUnsupported("chamber fans are computed for d <= 2, got d = " + std::to_string(A.dim()));

  auto [first, second] = ordered_dual_rays(A);
  Weight seed = default_weight(A, level);
  std::vector<Chamber> left_side;
  std::vector<Chamber> right_side{solve_chamber(A, level, seed, options.degree_bound)};
  while (right_side.back().cone.rays[1] != second)
    right_side.push_back(chamber_beyond(A, level, right_side.back().cone.rays[1], second, true, options.degree_bound));
  const Chamber* leftmost = &right_side.front();
  while (leftmost->cone.rays[0] != first) {
    left_side.push_back(chamber_beyond(A, level, leftmost->cone.rays[0], first, false, options.degree_bound));
    leftmost = &left_side.back();
  }
  for (auto it = left_side.rbegin(); it != left_side.rend(); ++it) fan.chambers.push_back(std::move(*it));
  for (auto& c : right_side) fan.chambers.push_back(std::move(c));

  // Coverage: consecutive chambers share walls and the ends are the dual rays.
  if (fan.chambers.front().cone.rays[0] != first || fan.chambers.back().cone.rays[1] != second) fan.certified = false;
  for (std::size_t i = 0; i + 1 < fan.chambers.size(); ++i)
    if (fan.chambers[i].cone.rays[1] != fan.chambers[i + 1].cone.rays[0]) fan.certified = false;

  // Re-verification at independent interior samples.
  for (const auto& c : fan.chambers) {
    for (const auto& u : interior_samples(c, options.verification_samples)) {
      try {
        if (!standard_set(A, level, u).same_reps(c.standard)) fan.certified = false;
      } catch (const WeightNotGeneric&) {
        fan.certified = false;
      }
    }
  }
  return fan;
}

std::optional<std::size_t> containing_chamber(const ChamberFan& fan, const RationalCone& cone) {
  for (std::size_t i = 0; i < fan.chambers.size(); ++i)
    if (cone.subset_of(fan.chambers[i].cone)) return i;
  return std::nullopt;
}

bool refines(const ChamberFan& finer, const ChamberFan& coarser) {
  if (!finer.certified || !coarser.certified) throw UncertifiedInput("refines() needs certified fans");
  return std::all_of(finer.chambers.begin(), finer.chambers.end(),
                     [&](const Chamber& c) { return containing_chamber(coarser, c.cone).has_value(); });
}

std::string DominationVerdict::describe() const {
  std::ostringstream os;
  if (value) {
    os << "dominates";
  } else if (refinement_failure) {
    os << "higher chamber " << *higher_chamber << " lies in no lower chamber";
  } else {
    os << to_string(*missing_generator) << " (generator of lower chamber " << *lower_chamber
       << ") is not in the chart monoid of higher chamber " << *higher_chamber;
  }
  if (!certified) os << " [uncertified]";
  return os.str();
}

DominationVerdict dominates(const ChamberFan& higher, const ChamberFan& lower) {
  if (!higher.certified || !lower.certified) throw UncertifiedInput("dominates() needs certified fans");
  DominationVerdict v;
  for (std::size_t i = 0; i < higher.chambers.size(); ++i) {
    const Chamber& hi = higher.chambers[i];
    v.certified = v.certified && hi.chart.certified();
    auto j = containing_chamber(lower, hi.cone);
    if (!j) {
      if (v.value) {
        v.value = false;
        v.refinement_failure = true;
        v.higher_chamber = i;
      }
      continue;
    }
    const Chamber& lo = lower.chambers[*j];
    v.certified = v.certified && lo.chart.certified();
    if (!v.value) continue;
    GradedEnumerator members(hi.chart.generators, hi.sample.covector);
    for (const auto& g : lo.chart.generators) {
      if (!members.contains(g)) {
        v.value = false;
        v.higher_chamber = i;
        v.lower_chamber = *j;
        v.missing_generator = g;
        break;
      }
    }
  }
  return v;
}

}  // namespace fblow
