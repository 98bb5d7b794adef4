#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fblow/lattice.hpp"

namespace fblow {

using Exponents = std::vector<std::uint32_t>;

/// Sparse polynomial over the prime field Z/p. Terms are kept in a map keyed
/// by exponent vector (lexicographic), so iteration order is canonical.
class FpPolynomial {
 public:
  FpPolynomial(Int p, std::size_t nvars);

  Int p() const { return p_; }
  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds coeff * x^exps; the coefficient is reduced mod p and zero terms dropped.
  void add_term(const Exponents& exps, Int coeff);
  Int coefficient(const Exponents& exps) const;

  friend FpPolynomial operator*(const FpPolynomial& a, const FpPolynomial& b);
  friend bool operator==(const FpPolynomial&, const FpPolynomial&) = default;

 private:
  Int p_;
  std::size_t nvars_;
  std::map<Exponents, Int> terms_;
};

/// Parses sums of terms such as `x0^2*x1 + 3*x2 - x3`. Variables are x0..x9;
/// integer coefficients are reduced mod p. nvars is at least min_vars and at
/// least one more than the largest variable index used. Throws ParseError.
FpPolynomial parse_polynomial(std::string_view text, Int p, std::size_t min_vars = 0);

std::string monomial_to_string(const Exponents& exps);
std::string to_string(const FpPolynomial& f);

/// f^k by binary exponentiation.
FpPolynomial power_mod_p(const FpPolynomial& f, std::uint64_t k);

struct FedderVerdict {
  bool f_pure = false;
  /// A monomial of f^(p-1) with every exponent <= p - 1.
  std::optional<Exponents> witness;
};

/// k[[x]]/(f) is F-pure iff f^(p-1) has a term outside (x_0^p, ..., x_n^p).
/// Throws ConstantTermPresent when f is not in the maximal ideal.
FedderVerdict fedder_f_pure(const FpPolynomial& f);

}  // namespace fblow
