#include "fblow/analysis.hpp"

#include <algorithm>
#include <set>

#include "fblow/enumerate.hpp"

namespace fblow {

namespace {

PredicateVerdict weakly_normal_numerical(const AffineMonoid& A, Int p) {
  const Int sign = A.generators().front()[0] > 0 ? 1 : -1;
  const Int c = conductor(A);
  // Membership table up to p * c; everything beyond c is in A.
  const Int top = checked_mul(p, c);
  std::vector<char> member(static_cast<std::size_t>(top) + 1, 0);
  member[0] = 1;
  for (Int n = 1; n <= top; ++n)
    for (const auto& g : A.generators()) {
      Int v = sign * g[0];
      if (v <= n && member[static_cast<std::size_t>(n - v)]) {
        member[static_cast<std::size_t>(n)] = 1;
        break;
      }
    }
  PredicateVerdict verdict;
  for (Int m = 1; m < c; ++m) {
    if (!member[static_cast<std::size_t>(m)] && member[static_cast<std::size_t>(p * m)]) {
      verdict.value = false;
      verdict.witness = LatticeVector{sign * m};
      break;
    }
  }
  return verdict;
}

}  // namespace

PredicateVerdict is_weakly_normal(const AffineMonoid& A, Int p, std::optional<Int> bound) {
  validate_standing_assumptions(A);
  if (!is_prime(p)) throw ValidationError("p = " + std::to_string(p) + " is not prime");
  if (A.dim() == 1) return weakly_normal_numerical(A, p);

  const Weight w0 = interior_weight(A);
  Int limit = 0;
  if (bound) {
    limit = *bound;
  } else {
    for (const auto& g : A.generators()) limit = std::max(limit, dot(g, w0.covector));
    limit = checked_mul(6, limit);
  }
  GradedEnumerator en(A.generators(), w0.covector);
  en.settle_through(checked_mul(p, limit));
  PredicateVerdict verdict;
  verdict.checked_bound = limit;
  const std::size_t count = en.settled().size();
  for (std::size_t i = 0; i < count; ++i) {
    const LatticeVector a = en.settled()[i].element;
    bool divisible = std::all_of(a.coords().begin(), a.coords().end(), [&](Int x) { return x % p == 0; });
    if (!divisible || a.is_zero()) continue;
    LatticeVector m = a;
    for (std::size_t k = 0; k < m.dim(); ++k) m[k] /= p;
    if (!en.contains(m)) {
      verdict.value = false;
      verdict.witness = m;
      return verdict;
    }
  }
  // Normal monoids are weakly normal in every characteristic.
  PredicateVerdict normal = is_normal(A);
  verdict.certified = normal.certified && normal.value;
  return verdict;
}

PredicateVerdict is_F_pure(const AffineMonoid& A, Int p, std::optional<Int> bound) {
  return is_weakly_normal(A, p, bound);
}

PredicateVerdict is_normal(const AffineMonoid& A) {
  SaturationResult sat = saturation(A);
  PredicateVerdict verdict;
  verdict.certified = sat.certified;
  GradedEnumerator en(A.generators(), interior_weight(A).covector);
  for (const auto& h : sat.monoid.generators()) {
    if (!en.contains(h)) {
      verdict.value = false;
      verdict.witness = h;
      break;
    }
  }
  return verdict;
}

PredicateVerdict condition_star(const AffineMonoid& A, Int p, int e, const Chamber& high, const Chamber& low) {
  if (!(low.standard.level == FrobeniusLevel(p, e)) || !(high.standard.level == FrobeniusLevel(p, e + 1)))
    throw ValidationError("condition_star expects chambers at levels e and e + 1");
  if (!high.cone.subset_of(low.cone)) throw ValidationError("condition_star: higher chamber is not inside lower chamber");

  GradedEnumerator en(A.generators(), high.sample.covector);
  std::set<LatticeVector> lhs, rhs;
  for (const auto& a : low.standard.elements()) lhs.insert(p * a);
  for (const auto& b : high.standard.elements()) {
    bool divisible = std::all_of(b.coords().begin(), b.coords().end(), [&](Int x) { return x % p == 0; });
    if (!divisible) continue;
    LatticeVector m = b;
    for (std::size_t k = 0; k < m.dim(); ++k) m[k] /= p;
    if (en.contains(m)) rhs.insert(b);
  }

  PredicateVerdict verdict;
  verdict.denominator = high.standard.level.q();
  std::vector<LatticeVector> diff;
  std::set_symmetric_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(diff));
  if (!diff.empty()) {
    const auto& w = high.sample.covector;
    verdict.value = false;
    verdict.witness = *std::min_element(diff.begin(), diff.end(), [&](const auto& x, const auto& y) {
      Int wx = dot(x, w), wy = dot(y, w);
      return wx != wy ? wx < wy : x < y;
    });
  }
  return verdict;
}

bool StepReport::condition_star_holds() const {
  if (condition_star.empty()) return false;
  return std::all_of(condition_star.begin(), condition_star.end(),
                     [](const ChamberStar& c) { return c.verdict && c.verdict->value; });
}

bool same_blowup(const ChamberFan& a, const ChamberFan& b) {
  if (a.chambers.size() != b.chambers.size()) return false;
  for (std::size_t i = 0; i < a.chambers.size(); ++i) {
    if (!(a.chambers[i].cone == b.chambers[i].cone)) return false;
    if (a.chambers[i].chart.generators != b.chambers[i].chart.generators) return false;
  }
  return true;
}

SequenceReport analyze_sequence(const AffineMonoid& A, Int p, int e_max, const SequenceOptions& options) {
  validate_standing_assumptions(A);
  if (!is_prime(p)) throw ValidationError("p = " + std::to_string(p) + " is not prime");
  const int limit = options.e_limit.value_or(A.dim() == 1 ? 6 : 3);
  if (e_max < 1 || e_max > limit)
    throw ValidationError("e_max must lie in [1, " + std::to_string(limit) + "], got " + std::to_string(e_max));

  SequenceReport report{A, p, {}, {}, std::nullopt, false, {}, {}, {}};
  FanOptions fan_options;
  fan_options.degree_bound = options.degree_bound;
  for (int e = 1; e <= e_max; ++e) {
    LevelResult level{e, std::nullopt, {}};
    try {
      level.fan = compute_fan(A, FrobeniusLevel(p, e), fan_options);
    } catch (const Error& err) {
      level.error = err.what();
    }
    report.levels.push_back(std::move(level));
  }

  for (int e = 1; e < e_max; ++e) {
    const auto& lower = report.levels[e - 1].fan;
    const auto& higher = report.levels[e].fan;
    StepReport step{e, std::nullopt, {}, {}};
    if (!lower || !higher) {
      step.error = "level computation failed";
      report.steps.push_back(std::move(step));
      continue;
    }
    try {
      step.dominates = dominates(*higher, *lower);
    } catch (const Error& err) {
      step.error = err.what();
    }
    for (std::size_t i = 0; i < higher->chambers.size(); ++i) {
      ChamberStar entry{i, containing_chamber(*lower, higher->chambers[i].cone), std::nullopt};
      if (entry.low_chamber) {
        try {
          entry.verdict = condition_star(A, p, e, higher->chambers[i], lower->chambers[*entry.low_chamber]);
        } catch (const Error& err) {
          step.error = err.what();
        }
      }
      step.condition_star.push_back(std::move(entry));
    }
    report.steps.push_back(std::move(step));
  }

  // Stabilization within the computed range.
  auto& levels = report.levels;
  if (levels.back().fan) {
    int e0 = e_max;
    while (e0 > 1 && levels[e0 - 2].fan && same_blowup(*levels[e0 - 2].fan, *levels.back().fan)) --e0;
    if (e0 < e_max) report.stabilized_at = e0;
  }
  if (report.stabilized_at && A.dim() == 1) {
    const Int sign = A.generators().front()[0] > 0 ? 1 : -1;
    const auto& final_chart = levels.back().fan->chambers.front().chart.generators;
    const Int q = FrobeniusLevel(p, e_max).q();
    report.stabilization_certified = final_chart == std::vector<LatticeVector>{LatticeVector{sign}} && q > conductor(A);
  }

  report.weakly_normal = is_weakly_normal(A, p);
  report.f_pure = report.weakly_normal;
  report.normal = is_normal(A);
  return report;
}

}  // namespace fblow
