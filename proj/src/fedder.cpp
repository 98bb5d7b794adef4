#include "fblow/fedder.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "fblow/frobenius.hpp"

namespace fblow {

FpPolynomial::FpPolynomial(Int p, std::size_t nvars) : p_(p), nvars_(nvars) {
  if (!is_prime(p)) throw ValidationError("p = " + std::to_string(p) + " is not prime");
}

void FpPolynomial::add_term(const Exponents& exps, Int coeff) {
  if (exps.size() != nvars_) throw ValidationError("exponent vector has the wrong length");
  Int c = floor_mod(coeff, p_);
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second = (it->second + c) % p_;
    if (it->second == 0) terms_.erase(it);
  }
}

Int FpPolynomial::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? 0 : it->second;
}

FpPolynomial operator*(const FpPolynomial& a, const FpPolynomial& b) {
  if (a.p_ != b.p_ || a.nvars_ != b.nvars_) throw ValidationError("polynomials over different rings");
  FpPolynomial out(a.p_, a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (ea[i] > std::numeric_limits<std::uint32_t>::max() - eb[i]) throw ArithmeticOverflow();
        e[i] = ea[i] + eb[i];
      }
      out.add_term(e, ca * cb % a.p_);
    }
  }
  return out;
}

FpPolynomial power_mod_p(const FpPolynomial& f, std::uint64_t k) {
  FpPolynomial result(f.p(), f.nvars());
  result.add_term(Exponents(f.nvars(), 0), 1);
  FpPolynomial base = f;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

std::string monomial_to_string(const Exponents& exps) {
  std::string s;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i);
    if (exps[i] > 1) s += "^" + std::to_string(exps[i]);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const FpPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string s;
  // Highest exponent vector first.
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    if (!s.empty()) s += " + ";
    bool constant = std::all_of(it->first.begin(), it->first.end(), [](auto x) { return x == 0; });
    if (it->second != 1 || constant) {
      s += std::to_string(it->second);
      if (!constant) s += "*";
    }
    if (!constant) s += monomial_to_string(it->first);
  }
  return s;
}

namespace {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, Int p) : text_(text), p_(p) {}

  FpPolynomial parse(std::size_t min_vars) {
    std::vector<std::pair<std::vector<std::uint32_t>, Int>> terms;
    std::size_t nvars = min_vars;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      Int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = take() == '-' ? -1 : 1;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [exps, coeff] = parse_term();
      for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] > 0) nvars = std::max(nvars, i + 1);
      terms.emplace_back(std::move(exps), sign * coeff);
      skip_space();
    }
    nvars = std::max<std::size_t>(nvars, 1);
    FpPolynomial f(p_, nvars);
    for (auto& [exps, coeff] : terms) {
      exps.resize(nvars, 0);
      f.add_term(exps, coeff);
    }
    return f;
  }

 private:
  std::pair<std::vector<std::uint32_t>, Int> parse_term() {
    std::vector<std::uint32_t> exps(10, 0);
    Int coeff = 1;
    for (;;) {
      skip_space();
      if (at_end()) fail("expected a factor");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = floor_mod(checked_mul(coeff, floor_mod(parse_integer(), p_)), p_);
      } else if (peek() == 'x') {
        take();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected variable index after 'x'");
        Int index = parse_integer();
        if (index > 9) fail("variables are x0..x9");
        std::uint32_t power = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          take();
          skip_space();
          Int k = parse_integer();
          if (k > std::numeric_limits<std::uint32_t>::max()) fail("exponent too large");
          power = static_cast<std::uint32_t>(k);
        }
        exps[static_cast<std::size_t>(index)] += power;
      } else {
        fail(std::string("unexpected character '") + peek() + "'");
      }
      skip_space();
      if (at_end() || peek() != '*') break;
      take();
    }
    return {exps, coeff};
  }

  Int parse_integer() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    Int v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) v = checked_add(checked_mul(v, 10), take() - '0');
    return v;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial: " + what + " at position " + std::to_string(pos_));
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }

  std::string_view text_;
  Int p_;
  std::size_t pos_ = 0;
};

}  // namespace

FpPolynomial parse_polynomial(std::string_view text, Int p, std::size_t min_vars) {
  if (!is_prime(p)) throw ValidationError("p = " + std::to_string(p) + " is not prime");
  return PolynomialParser(text, p).parse(min_vars);
}

FedderVerdict fedder_f_pure(const FpPolynomial& f) {
  if (f.is_zero()) throw ValidationError("polynomial is zero");
  if (f.coefficient(Exponents(f.nvars(), 0)) != 0) throw ConstantTermPresent();
  const auto bound = static_cast<std::uint32_t>(f.p() - 1);
  FpPolynomial g = power_mod_p(f, static_cast<std::uint64_t>(f.p() - 1));
  FedderVerdict v;
  for (const auto& [exps, coeff] : g.terms()) {
    if (std::all_of(exps.begin(), exps.end(), [&](auto x) { return x <= bound; })) {
      v.f_pure = true;
      v.witness = exps;
      break;
    }
  }
  return v;
}

}  // namespace fblow
