#include "fblow/cli.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "fblow/analysis.hpp"
#include "fblow/fedder.hpp"

namespace fblow::cli {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Input

namespace {

Int as_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) throw ParseError("field '" + field + "' must be an integer");
  return j.get<Int>();
}

LatticeVector parse_vector(const json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError("field '" + field + "' must be an array of integers");
  std::vector<Int> coords;
  for (const auto& x : j) coords.push_back(as_int(x, field));
  return LatticeVector(std::move(coords));
}

LatticeVector parse_weight_list(const std::string& text) {
  std::vector<Int> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      coords.push_back(std::stoll(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("--weight expects comma-separated integers, got '" + text + "'");
    }
  }
  return LatticeVector(std::move(coords));
}

void validate(InputSpec& spec) {
  if (spec.p == 0) throw ValidationError("field 'p' is required");
  if (!is_prime(spec.p)) throw ValidationError("p = " + std::to_string(spec.p) + " is not prime");
  if (spec.e && *spec.e < 0) throw ValidationError("e must be nonnegative");
  if (spec.e_max && *spec.e_max < 1) throw ValidationError("e_max must be at least 1");
  if (spec.weight && spec.weight->dim() != spec.dim)
    throw ValidationError("weight has dimension " + std::to_string(spec.weight->dim()) + ", expected " +
                          std::to_string(spec.dim));
  validate_standing_assumptions(spec.monoid());
}

}  // namespace

InputSpec parse_input_json(const json& j) {
  if (!j.is_object()) throw ParseError("input must be a JSON object");
  InputSpec spec;
  if (!j.contains("dim")) throw ParseError("missing field 'dim'");
  Int dim = as_int(j.at("dim"), "dim");
  if (dim < 1) throw ValidationError("dim must be positive");
  spec.dim = static_cast<std::size_t>(dim);
  if (!j.contains("generators") || !j.at("generators").is_array()) throw ParseError("missing array field 'generators'");
  for (const auto& g : j.at("generators")) spec.generators.push_back(parse_vector(g, "generators"));
  if (j.contains("p")) spec.p = as_int(j.at("p"), "p");
  if (j.contains("e")) spec.e = static_cast<int>(as_int(j.at("e"), "e"));
  if (j.contains("e_max")) spec.e_max = static_cast<int>(as_int(j.at("e_max"), "e_max"));
  if (j.contains("weight")) spec.weight = parse_vector(j.at("weight"), "weight");
  if (j.contains("degree_bound")) spec.degree_bound = as_int(j.at("degree_bound"), "degree_bound");
  // AffineMonoid's constructor checks dimensions and zero generators.
  (void)spec.monoid();
  validate(spec);
  return spec;
}

InputSpec parse_input(std::string_view path_or_text) {
  std::string text;
  auto first = path_or_text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && path_or_text[first] == '{') {
    text = std::string(path_or_text);
  } else {
    std::ifstream in{std::string(path_or_text)};
    if (!in) throw ParseError("cannot read input file '" + std::string(path_or_text) + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("malformed JSON: ") + err.what());
  }
  return parse_input_json(j);
}

void apply_flags(InputSpec& spec, const RunFlags& flags) {
  if (flags.e) spec.e = flags.e;
  if (flags.e_max) spec.e_max = flags.e_max;
  if (flags.weight) spec.weight = parse_weight_list(*flags.weight);
  if (flags.degree_bound) spec.degree_bound = flags.degree_bound;
  validate(spec);
}

int exit_code_for(const std::exception& err) {
  if (dynamic_cast<const ParseError*>(&err) || dynamic_cast<const ValidationError*>(&err)) return 1;
  return 3;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

json to_json(const LatticeVector& v) { return json(v.coords()); }

json to_json(const std::vector<LatticeVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

json to_json(const PredicateVerdict& v) {
  json out{{"value", v.value}, {"certified", v.certified}};
  out["witness"] = v.witness ? json(v.witness_text()) : json(nullptr);
  out["checked_bound"] = v.checked_bound ? json(*v.checked_bound) : json(nullptr);
  return out;
}

json input_echo(const InputSpec& spec) {
  json out{{"dim", spec.dim}, {"generators", to_json(spec.generators)}, {"p", spec.p}};
  if (spec.e) out["e"] = *spec.e;
  if (spec.e_max) out["e_max"] = *spec.e_max;
  if (spec.weight) out["weight"] = to_json(*spec.weight);
  if (spec.degree_bound) out["degree_bound"] = *spec.degree_bound;
  return out;
}

json chart_json(const ChartMonoid& c) {
  json out{{"generators", to_json(c.generators)}, {"certified", c.certified()}};
  out["complete_up_to"] = c.complete_up_to ? json(*c.complete_up_to) : json(nullptr);
  return out;
}

json chamber_json(const Chamber& c, bool& certified) {
  PredicateVerdict smooth = is_smooth_chart(c.chart);
  certified = certified && c.chart.certified();
  return json{{"rays", to_json(c.cone.rays)},
              {"halfspaces", to_json(c.cone.halfspaces)},
              {"sample", to_json(c.sample.covector)},
              {"standard_set", to_json(c.standard.elements())},
              {"chart", chart_json(c.chart)},
              {"smooth", to_json(smooth)}};
}

json fan_json(const ChamberFan& fan, bool& certified) {
  certified = certified && fan.certified;
  json chambers = json::array();
  for (const auto& c : fan.chambers) chambers.push_back(chamber_json(c, certified));
  return json{{"e", fan.level.e()}, {"q", fan.level.q()}, {"certified", fan.certified}, {"chambers", chambers}};
}

json header(const char* command) { return json{{"command", command}, {"version", kVersion}}; }

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  auto is_scalar_list = [](const json& a) {
    return std::all_of(a.begin(), a.end(), [](const json& x) {
      return x.is_primitive() || (x.is_array() && std::all_of(x.begin(), x.end(), [](const json& y) { return y.is_primitive(); }));
    });
  };
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, rows);
  } else if (j.is_array() && !is_scalar_list(j)) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else if (j.is_string()) {
    rows.emplace_back(prefix, j.get<std::string>());
  } else {
    rows.emplace_back(prefix, j.dump());
  }
}

}  // namespace

std::string Report::render(Format format) const {
  if (format == Format::Json) return body.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(body, "", rows);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::string out;
  for (const auto& [k, v] : rows) out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Commands

Report run_analyze(const InputSpec& spec) {
  AffineMonoid A = spec.monoid();
  Report r;
  r.body = header("analyze");
  r.body["input"] = input_echo(spec);
  PredicateVerdict wn = is_weakly_normal(A, spec.p);
  PredicateVerdict fp = is_F_pure(A, spec.p);
  PredicateVerdict normal = is_normal(A);
  r.body["weakly_normal"] = to_json(wn);
  r.body["f_pure"] = to_json(fp);
  r.body["normal"] = to_json(normal);
  r.certified = wn.certified && fp.certified && normal.certified;
  r.body["certified"] = r.certified;
  return r;
}

Report run_fblow(const InputSpec& spec) {
  AffineMonoid A = spec.monoid();
  FrobeniusLevel level(spec.p, spec.e.value_or(1));
  Report r;
  r.body = header("fblow");
  r.body["input"] = input_echo(spec);
  bool certified = true;
  if (A.dim() <= 2) {
    FanOptions options;
    options.degree_bound = spec.degree_bound;
    r.body["fan"] = fan_json(compute_fan(A, level, options), certified);
  } else if (!spec.weight) {
    throw DimensionUnsupported("chamber fans need d <= 2; pass --weight to compute one chart in d = " +
                               std::to_string(A.dim()));
  }
  if (spec.weight) {
    Weight w{*spec.weight};
    StandardSet s = standard_set(A, level, w);
    ChartMonoid chart = chart_monoid(A, s, spec.degree_bound);
    certified = certified && chart.certified();
    r.body["at_weight"] = json{{"weight", to_json(w.covector)},
                               {"standard_set", to_json(s.elements())},
                               {"chart", chart_json(chart)},
                               {"smooth", to_json(is_smooth_chart(chart))}};
  }
  r.certified = certified;
  r.body["certified"] = certified;
  return r;
}

Report run_sequence(const InputSpec& spec) {
  AffineMonoid A = spec.monoid();
  const int e_max = spec.e_max.value_or(spec.e.value_or(2));
  SequenceOptions options;
  options.degree_bound = spec.degree_bound;
  SequenceReport seq = analyze_sequence(A, spec.p, e_max, options);

  Report r;
  r.body = header("sequence");
  r.body["input"] = input_echo(spec);
  bool certified = true;
  json levels = json::array(), charts = json::array();
  for (const auto& level : seq.levels) {
    if (level.fan) {
      levels.push_back(fan_json(*level.fan, certified));
      // d = 1 has a single chamber, so its level entry is the generator list.
      if (A.dim() == 1) {
        charts.push_back(to_json(level.fan->chambers.front().chart.generators));
      } else {
        json per_chamber = json::array();
        for (const auto& c : level.fan->chambers) per_chamber.push_back(to_json(c.chart.generators));
        charts.push_back(per_chamber);
      }
    } else {
      certified = false;
      levels.push_back(json{{"e", level.e}, {"error", level.error}});
      charts.push_back(nullptr);
    }
  }
  r.body["levels"] = levels;
  r.body["charts"] = charts;

  json dom = json::object(), dom_detail = json::object(), star = json::object();
  for (const auto& step : seq.steps) {
    const std::string key = std::to_string(step.from_e) + "->" + std::to_string(step.from_e + 1);
    if (step.dominates) {
      dom[key] = step.dominates->value;
      dom_detail[key] = json{{"value", step.dominates->value},
                             {"certified", step.dominates->certified},
                             {"detail", step.dominates->describe()}};
      certified = certified && step.dominates->certified;
    } else {
      dom[key] = nullptr;
      dom_detail[key] = json{{"error", step.error}};
      certified = false;
    }
    json chambers = json::array();
    for (const auto& c : step.condition_star) {
      json entry{{"high_chamber", c.high_chamber}};
      entry["low_chamber"] = c.low_chamber ? json(*c.low_chamber) : json(nullptr);
      entry["verdict"] = c.verdict ? to_json(*c.verdict) : json(nullptr);
      chambers.push_back(entry);
    }
    star[key] = json{{"holds", step.condition_star_holds()}, {"chambers", chambers}};
    if (!step.error.empty()) star[key]["error"] = step.error;
  }
  r.body["dominates"] = dom;
  r.body["dominates_detail"] = dom_detail;
  r.body["condition_star"] = star;
  r.body["stabilized_at"] = seq.stabilized_at ? json(*seq.stabilized_at) : json(nullptr);
  r.body["stabilization_certified"] = seq.stabilization_certified;
  r.body["weakly_normal"] = to_json(seq.weakly_normal);
  r.body["f_pure"] = to_json(seq.f_pure);
  r.body["normal"] = to_json(seq.normal);
  certified = certified && seq.weakly_normal.certified && seq.normal.certified;
  r.certified = certified;
  r.body["certified"] = certified;
  return r;
}

Report run_fedder(std::string_view polynomial, Int p) {
  FpPolynomial f = parse_polynomial(polynomial, p);
  FedderVerdict v = fedder_f_pure(f);
  Report r;
  r.body = header("fedder");
  r.body["polynomial"] = to_string(f);
  r.body["p"] = p;
  r.body["f_pure"] = v.f_pure;
  r.body["witness"] = v.witness ? json(monomial_to_string(*v.witness)) : json(nullptr);
  r.body["certified"] = true;
  return r;
}

// ---------------------------------------------------------------------------
// Property mode

std::vector<AffineMonoid> random_corpus(std::uint64_t seed, std::size_t count, std::size_t dim) {
  std::mt19937_64 rng(seed);
  std::vector<AffineMonoid> out;
  while (out.size() < count) {
    std::vector<LatticeVector> gens;
    if (dim == 1) {
      std::uniform_int_distribution<Int> value(1, 12), size(1, 4);
      for (Int k = size(rng); k > 0; --k) gens.push_back(LatticeVector{value(rng)});
    } else {
      std::uniform_int_distribution<Int> coord(-2, 4), size(2, 4);
      for (Int k = size(rng); k > 0; --k) {
        std::vector<Int> c(dim);
        for (auto& x : c) x = coord(rng);
        gens.emplace_back(std::move(c));
      }
    }
    if (std::any_of(gens.begin(), gens.end(), [](const auto& g) { return g.is_zero(); })) continue;
    AffineMonoid A(dim, gens);
    if (!group_generates(A) || !is_pointed(A)) continue;
    // Keep the enumeration sizes modest.
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

Report run_properties(std::uint64_t seed, std::size_t count) {
  Report r;
  r.body = header("properties");
  r.body["seed"] = seed;
  json violations = json::array();
  std::size_t cardinality_checks = 0, implication_checks = 0;
  for (std::size_t dim : {1u, 2u}) {
    for (const auto& A : random_corpus(seed + dim, count, dim)) {
      json monoid = to_json(A.generators());
      for (Int p : {2, 3}) {
        for (int e : {1, 2}) {
          FrobeniusLevel level(p, e);
          StandardSet s = standard_set(A, level, default_weight(A, level));
          ++cardinality_checks;
          if (static_cast<Int>(s.reps.size()) != checked_pow(level.q(), static_cast<unsigned>(dim)))
            violations.push_back(json{{"property", "cardinality"}, {"monoid", monoid}, {"p", p}, {"e", e}});
        }
      }
      PredicateVerdict normal = is_normal(A);
      for (Int p : {2, 3, 5}) {
        ++implication_checks;
        if (normal.certified && normal.value && !is_weakly_normal(A, p).value)
          violations.push_back(json{{"property", "normal implies weakly normal"}, {"monoid", monoid}, {"p", p}});
      }
    }
  }
  r.body["cardinality_checks"] = cardinality_checks;
  r.body["implication_checks"] = implication_checks;
  r.body["violations"] = violations;
  r.failed = !violations.empty();
  r.body["certified"] = true;
  return r;
}

}  // namespace fblow::cli
