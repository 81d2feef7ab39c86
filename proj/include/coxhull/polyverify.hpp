#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coxhull/polynomial.hpp"

namespace coxhull {

// One disagreeing monomial, reported verbatim so that a misprint in the
// expected expansion can be told apart from an arithmetic bug.
struct TermMismatch {
  std::string term;
  BigInt expected;
  BigInt got;
};

// Monomials whose coefficients differ, in graded-lex order of `expected`'s
// variables (terms of `got` over other variables appended).
std::vector<TermMismatch> compare_terms(const MultiPoly& expected, const MultiPoly& got);

// Variables of the c2t substitution, in this order.
inline const std::vector<std::string> kC2Vars{"k", "n", "p", "q"};
// Variables of the a2t inequality, in this order.
inline const std::vector<std::string> kA2Vars{"x", "y", "a", "b"};

// The printed expansion of LHS - RHS for the c2t reduced case.
inline constexpr const char* kC2ExpectedExpansion =
    "16knpq+32knp+32knq+36kn+32npq+64nq+60np+68n+16kpq+32kp+28kq+32k+12pq+24p+20q+22";

struct C2ExpansionResult {
  MultiPoly lhs;  // over (a, b, x, y)
  MultiPoly rhs;
  MultiPoly difference;  // LHS - RHS after substitution, over (k, n, p, q)
  MultiPoly expected;
  std::vector<TermMismatch> mismatches;

  bool matches() const { return mismatches.empty(); }
};

// Builds both sides of the c2t reduced-case inequality, substitutes
// a = 4n+2, b = k+2, x = 4n+4q+5, y = k+p+3 and compares the expanded
// difference with the printed 16-term expansion.
C2ExpansionResult verify_prop32_expansion();

// |Conv(v, w)| summed row by row, minus its printed simplification
// 3(x-a+3) + (y-b-2)(x-a+5), over (a, b, x, y).
MultiPoly c2_vw_simplification_residual();

// LHS - RHS with the row-sum |Conv(v, w)| in place of the simplification,
// after the same substitution, over (k, n, p, q).
MultiPoly c2_row_sum_difference();

struct A2IdentityResult {
  MultiPoly lhs_product;  // (xy + x - y^2 + 2y + 1)(ab + a - b^2 + b + 1)
  MultiPoly lhs_decomposed;
  MultiPoly rhs_direct;  // (x+a)(y+b) + (x+a) - (y+b)^2 + 2(y+b) + 1
  MultiPoly rhs_factored;  // (x-y+a-b+3)(y+b+1) - 2
  std::vector<TermMismatch> lhs_residual;
  std::vector<TermMismatch> rhs_residual;
  bool lhs_match = false;
  bool rhs_match = false;
};

A2IdentityResult verify_prop31_identities();

struct BoxResult {
  std::int64_t bound = 0;
  std::uint64_t tuples_checked = 0;
  std::uint64_t violations = 0;
  std::string first_violation;  // "(x,y,a,b)" or "(a,b,x,y)", empty if none
};

// Every tuple with all parameters in [0, bound] meeting the a2t constraints
// (x >= y-1, a >= b-1, x+y positive odd, a+b positive even).
BoxResult a2_inequality_box(std::int64_t bound);

// Every (a, b, x, y) in [0, bound]^4 with a = 2 mod 4, x = 1 mod 4,
// y > b >= 2 and x >= a + 3.
BoxResult c2_inequality_box(std::int64_t bound);

}  // namespace coxhull
