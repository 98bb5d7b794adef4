// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Exact integer comparisons throughout.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "fan_check.hpp"
#include "fblow/analysis.hpp"
#include "fblow/errors.hpp"
#include "fblow/fedder.hpp"
#include "oracles.hpp"

using namespace fblow;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
  void require(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

std::vector<LatticeVector> scalars(std::initializer_list<Int> xs) {
  std::vector<LatticeVector> out;
  for (Int x : xs) out.push_back(LatticeVector{x});
  return out;
}

AffineMonoid numerical(const std::vector<Int>& gens) {
  std::vector<LatticeVector> lv;
  for (Int g : gens) lv.push_back(LatticeVector{g});
  return AffineMonoid(1, lv);
}

// Every numerical semigroup with minimal generators in [1, 12], once each.
std::vector<std::vector<Int>> numerical_corpus() {
  std::set<std::vector<Int>> seen;
  for (unsigned mask = 1; mask < (1u << 12); ++mask) {
    std::vector<Int> gens;
    Int g = 0;
    for (Int k = 1; k <= 12; ++k)
      if (mask & (1u << (k - 1))) {
        gens.push_back(k);
        g = std::gcd(g, k);
      }
    if (g != 1) continue;
    // Drop generators reachable from smaller ones.
    std::vector<Int> minimal;
    std::vector<char> reach(13, 0);
    reach[0] = 1;
    for (Int x : gens) {
      if (reach[static_cast<std::size_t>(x)]) continue;
      minimal.push_back(x);
      for (Int n = x; n <= 12; ++n)
        if (reach[static_cast<std::size_t>(n - x)]) reach[static_cast<std::size_t>(n)] = 1;
    }
    seen.insert(minimal);
  }
  return {seen.begin(), seen.end()};
}

// Random pointed group-generating monoids, small enough to enumerate.
std::vector<AffineMonoid> random_monoids(std::uint64_t seed, std::size_t count, std::size_t dim) {
  std::mt19937_64 rng(seed);
  std::vector<AffineMonoid> out;
  while (out.size() < count) {
    std::vector<LatticeVector> gens;
    if (dim == 1) {
      std::uniform_int_distribution<Int> value(1, 12), size(1, 4);
      for (Int k = size(rng); k > 0; --k) gens.push_back(LatticeVector{value(rng)});
    } else {
      std::uniform_int_distribution<Int> coord(-2, 4), size(2, 4);
      for (Int k = size(rng); k > 0; --k) gens.push_back(LatticeVector{coord(rng), coord(rng)});
    }
    if (std::any_of(gens.begin(), gens.end(), [](const auto& g) { return g.is_zero(); })) continue;
    AffineMonoid A(dim, gens);
    if (!group_generates(A) || !is_pointed(A)) continue;
    if (dim == 2) {
      Weight w = interior_weight(A);
      Int heaviest = 0;
      for (const auto& g : gens) heaviest = std::max(heaviest, dot(g, w.covector));
      if (heaviest > 12) continue;
    }
    out.push_back(std::move(A));
  }
  return out;
}

Outcome octic_example() {
  Outcome out;
  auto A = numerical({8, 9, 10, 11});
  const Weight w{LatticeVector{1}};
  out.require(standard_set(A, FrobeniusLevel(2, 1), w).elements() == scalars({0, 9}), "S_1 differs");
  out.require(standard_set(A, FrobeniusLevel(2, 2), w).elements() == scalars({0, 9, 10, 11}), "S_2 differs");
  auto f1 = compute_fan(A, FrobeniusLevel(2, 1));
  auto f2 = compute_fan(A, FrobeniusLevel(2, 2));
  const auto& c1 = f1.chambers.at(0).chart;
  const auto& c2 = f2.chambers.at(0).chart;
  out.require(c1.generators == scalars({1}) && is_smooth_chart(c1).value, "level 1 chart");
  out.require(c2.generators == scalars({2, 3}) && !is_smooth_chart(c2).value, "level 2 chart");
  auto d = dominates(f2, f1);
  out.require(!d.value && d.missing_generator == LatticeVector{1}, "domination witness");
  return out;
}

Outcome cusp_example() {
  Outcome out;
  auto A = numerical({2, 3});
  const Weight w{LatticeVector{1}};
  out.require(standard_set(A, FrobeniusLevel(2, 1), w).elements() == scalars({0, 3}), "S_1 differs");
  out.require(standard_set(A, FrobeniusLevel(2, 2), w).elements() == scalars({0, 2, 3, 5}), "S_2 differs");
  auto seq = analyze_sequence(A, 2, 4);
  for (const auto& level : seq.levels)
    out.require(level.fan && level.fan->chambers.at(0).chart.generators == scalars({1}),
                "chart at e=" + std::to_string(level.e));
  for (const auto& step : seq.steps)
    out.require(step.dominates && step.dominates->value, "domination at step " + std::to_string(step.from_e));
  const auto& star = seq.steps.at(0).condition_star.at(0).verdict;
  out.require(star && !star->value && star->witness_text() == "3/2", "condition (*) witness");
  return out;
}

Outcome fedder_lemma() {
  Outcome out;
  auto v = fedder_f_pure(parse_polynomial("x0^2 + x1*x2", 2));
  out.require(v.f_pure && v.witness && monomial_to_string(*v.witness) == "x1*x2", "x^2 + yz");
  const std::vector<std::string> gs{"x0^2 + x1^3", "x0^3 + x1^4", "x0^5", "x0^2*x1 + x1^4", "x0^3 + x1^3 + x0*x1^2"};
  for (Int p : {2, 3, 5})
    for (const auto& g : gs)
      out.require(fedder_f_pure(parse_polynomial(g + " + x2*x3", p)).f_pure, g + " p=" + std::to_string(p));
  return out;
}

Outcome cardinality_law() {
  Outcome out;
  std::size_t cases = 0;
  for (std::size_t dim : {1u, 2u})
    for (const auto& A : random_monoids(100 + dim, 30, dim))
      for (Int p : {2, 3})
        for (int e : {1, 2}) {
          FrobeniusLevel level(p, e);
          auto s = standard_set(A, level, default_weight(A, level));
          out.require(static_cast<Int>(s.reps.size()) == checked_pow(level.q(), static_cast<unsigned>(dim)),
                      "cardinality for " + to_string(A.generators().front()));
          ++cases;
        }
  out.note += (out.note.empty() ? "" : "; ") + std::to_string(cases) + " cases over 60 monoids";
  return out;
}

Outcome property_suite() {
  Outcome out;
  std::vector<AffineMonoid> corpus;
  for (auto& A : random_monoids(7, 40, 1)) corpus.push_back(std::move(A));
  for (auto& A : random_monoids(8, 40, 2)) corpus.push_back(std::move(A));
  corpus.push_back(numerical({1}));
  corpus.push_back(AffineMonoid(2, {{1, 0}, {0, 1}}));
  corpus.push_back(AffineMonoid(2, {{1, 0}, {1, 1}, {1, 2}}));
  corpus.push_back(AffineMonoid(2, {{2, 1}, {1, 2}, {1, 1}}));
  corpus.push_back(AffineMonoid(2, {{1, 0}, {1, 1}, {1, 2}, {1, 3}}));
  std::size_t pure_inputs = 0, normal_inputs = 0;
  for (const auto& A : corpus) {
    const std::string name = to_string(A.generators().front()) + "...";
    for (Int p : {2, 3}) {
      auto fp = is_F_pure(A, p);
      if (!(fp.value && fp.certified)) continue;
      ++pure_inputs;
      auto seq = analyze_sequence(A, p, A.dim() == 1 ? 4 : 3);
      for (const auto& step : seq.steps) {
        out.require(step.dominates && step.dominates->value, "domination fails for F-pure " + name);
        out.require(step.condition_star_holds(), "condition (*) fails for F-pure " + name);
      }
    }
    auto normal = is_normal(A);
    if (normal.value && normal.certified) {
      ++normal_inputs;
      for (Int p : {2, 3, 5}) out.require(is_weakly_normal(A, p).value, "normal but not weakly normal " + name);
    }
  }
  out.require(pure_inputs > 0 && normal_inputs > 0, "vacuous corpus");
  out.note += (out.note.empty() ? "" : "; ") + std::to_string(pure_inputs) + " F-pure inputs, " +
              std::to_string(normal_inputs) + " normal inputs";
  return out;
}

Outcome chart_oracle() {
  Outcome out;
  std::size_t cases = 0;
  for (const auto& gens : numerical_corpus()) {
    auto A = numerical(gens);
    for (Int p : {2, 3})
      for (int e : {1, 2}) {
        FrobeniusLevel level(p, e);
        std::vector<LatticeVector> expected;
        for (Int c : oracle::numerical_chart(gens, level.q())) expected.push_back(LatticeVector{c});
        auto chart = chart_monoid(A, level, Weight{LatticeVector{1}});
        out.require(chart.certified() && chart.generators == expected,
                    "chart differs for " + std::to_string(gens.front()) + "... p=" + std::to_string(p));
        ++cases;
      }
  }
  out.note += (out.note.empty() ? "" : "; ") + std::to_string(cases) + " cases";
  return out;
}

Outcome normalization_limit() {
  Outcome out;
  std::size_t certified = 0, flagged = 0;
  for (const auto& gens : numerical_corpus()) {
    auto A = numerical(gens);
    for (Int p : {2, 3}) {
      auto seq = analyze_sequence(A, p, 6);
      const auto& final_chart = seq.levels.back().fan->chambers.at(0).chart.generators;
      if (seq.stabilization_certified) {
        ++certified;
        out.require(final_chart == scalars({1}), "incorrect stable chart");
      } else {
        ++flagged;
      }
    }
  }
  out.note += (out.note.empty() ? "" : "; ") + std::to_string(certified) + " certified, " + std::to_string(flagged) +
              " flagged insufficient";
  return out;
}

Outcome fan_consistency() {
  Outcome out;
  for (const auto& A : {AffineMonoid(2, {{1, 0}, {1, 1}, {1, 2}}), AffineMonoid(2, {{1, 0}, {1, 1}, {0, 2}})})
    for (Int p : {2, 3}) {
      auto fan = compute_fan(A, FrobeniusLevel(p, 1));
      auto mismatch = oracle::compare_with_sweep(A, p, fan, 5);
      out.require(mismatch.empty(), to_string(A.generators().back()) + " p=" + std::to_string(p) + ": " + mismatch);
    }
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "octic semigroup levels, charts and domination", 1, octic_example},
      {2, "cusp levels, charts, domination and condition (*)", 1, cusp_example},
      {3, "Fedder check for x^2 + yz and g + x_{n-1}x_n", 1, fedder_lemma},
      {4, "standard set cardinality law", 60, cardinality_law},
      {5, "F-pure and normal property suite", 120, property_suite},
      {6, "d = 1 chart monoid against the definition", 120, chart_oracle},
      {7, "normalization limit never misreports a stable chart", 600, normalization_limit},
      {8, "d = 2 fan against the dense sweep", 60, fan_consistency},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& err) {
      outcome.fail(std::string("exception: ") + err.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) outcome.fail("time limit exceeded");
    failures += outcome.ok ? 0 : 1;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (outcome.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << seconds << " s";
    if (!outcome.note.empty()) line << "; " << outcome.note;
    line << ")";
    std::cout << line.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
