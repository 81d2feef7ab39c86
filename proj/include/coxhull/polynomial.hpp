#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "coxhull/bigint.hpp"

namespace coxhull {

using Exponents = std::vector<int>;

// Graded lexicographic, largest first: higher total degree first, then
// lexicographically larger exponent vector first.
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse polynomial with integer coefficients over a named, ordered variable
// list. Exponent vectors are dense within that list; zero coefficients are
// never stored. Binary operations work over the union of the variable lists
// (left operand's variables first).
class MultiPoly {
 public:
  using Terms = std::map<Exponents, BigInt, GradedLexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables);
  static MultiPoly constant(const BigInt& c, std::vector<std::string> variables = {});
  // Throws Error{UnknownVariable} if `name` is not in `variables`.
  static MultiPoly variable(const std::string& name, std::vector<std::string> variables);

  const std::vector<std::string>& variables() const { return vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Coefficient of the monomial with the given exponents per variable name;
  // absent names have exponent 0. Throws UnknownVariable for names outside
  // the variable list.
  BigInt coefficient(const std::map<std::string, int>& monomial) const;

  // Same polynomial over `variables`. Throws UnknownVariable if a variable
  // with a nonzero exponent is dropped.
  MultiPoly reordered(const std::vector<std::string>& variables) const;

  void add_term(const Exponents& e, const BigInt& c);

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a);
  // Equal as polynomials, whatever the variable lists.
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return (a - b).is_zero(); }

  MultiPoly pow(int e) const;

  // Graded-lex order with explicit `*` and `^`, e.g. "16*k*n*p*q + 2*k^2 - 3".
  std::string to_string() const;
  // One monomial in the same notation, without coefficient ("1" if constant).
  std::string monomial_string(const Exponents& e) const;

 private:
  std::vector<std::string> vars_;
  Terms terms_;
};

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_sub(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b);

// Replace `var` by `replacement`. The result's variables are p's without
// `var`, followed by the replacement's new ones. Throws UnknownVariable if
// `var` is not among p's variables.
MultiPoly poly_substitute(const MultiPoly& p, const std::string& var, const MultiPoly& replacement);

// Throws UnknownVariable if a variable of p has no value.
BigInt poly_eval(const MultiPoly& p, const std::map<std::string, BigInt>& assignment);

// Integers, declared variables, + - * ^ (non-negative integer exponent),
// parentheses, unary minus and implicit multiplication ("16knpq",
// "2(x+1)"). Variable names are matched longest first. Throws
// Error{ParseError} on malformed text and Error{UnknownVariable} on an
// undeclared name.
MultiPoly poly_parse(std::string_view text, const std::vector<std::string>& variables);

// True iff every stored coefficient is >= 0.
bool check_nonneg_coeffs(const MultiPoly& p);

}  // namespace coxhull
