#pragma once

#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fblow/lattice.hpp"

namespace fblow::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Validated command input.
struct InputSpec {
  std::size_t dim = 0;
  std::vector<LatticeVector> generators;
  Int p = 0;
  std::optional<int> e;
  std::optional<int> e_max;
  std::optional<LatticeVector> weight;
  std::optional<Int> degree_bound;

  AffineMonoid monoid() const { return AffineMonoid(dim, generators); }
};

/// Reads a JSON object from a file, or parses text directly when it starts
/// with '{'. Throws ParseError for malformed input and ValidationError when a
/// field or a standing assumption fails.
InputSpec parse_input(std::string_view path_or_text);
InputSpec parse_input_json(const nlohmann::json& j);

/// Command-line overrides applied on top of the input file.
struct RunFlags {
  std::optional<int> e;
  std::optional<int> e_max;
  std::optional<std::string> weight;  // "w1,...,wd"
  std::optional<Int> degree_bound;
};

void apply_flags(InputSpec& spec, const RunFlags& flags);

enum class Format { Text, Json };

struct Report {
  nlohmann::json body;
  /// False when any quantity in the body rests on a bounded search.
  bool certified = true;
  /// A property check found a violation.
  bool failed = false;

  int exit_code() const { return failed ? 3 : (certified ? 0 : 2); }
  std::string render(Format format) const;
};

Report run_analyze(const InputSpec& spec);
Report run_fblow(const InputSpec& spec);
Report run_sequence(const InputSpec& spec);
Report run_fedder(std::string_view polynomial, Int p);

/// Random pointed group-generating monoids for property checks, seeded.
std::vector<AffineMonoid> random_corpus(std::uint64_t seed, std::size_t count, std::size_t dim);

/// Cardinality law and the predicate implications over a seeded corpus.
Report run_properties(std::uint64_t seed, std::size_t count);

/// 1 for parse/validation errors, 3 otherwise.
int exit_code_for(const std::exception& err);

}  // namespace fblow::cli
