#include "coxhull/polyverify.hpp"

#include "coxhull/formulas.hpp"

namespace coxhull {

namespace {

std::string tuple_string(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," + std::to_string(d) + ")";
}

void record(BoxResult& r, const InequalitySides& s, const std::string& tuple) {
  ++r.tuples_checked;
  if (s.lhs >= s.rhs) return;
  if (r.violations++ == 0) r.first_violation = tuple;
}

const std::vector<std::string> kC2CaseVars{"a", "b", "x", "y"};

MultiPoly substitute_c2(MultiPoly d) {
  d = poly_substitute(d, "a", poly_parse("4n+2", kC2Vars));
  d = poly_substitute(d, "b", poly_parse("k+2", kC2Vars));
  d = poly_substitute(d, "x", poly_parse("4n+4q+5", kC2Vars));
  d = poly_substitute(d, "y", poly_parse("k+p+3", kC2Vars));
  return d.reordered(kC2Vars);
}

}  // namespace

std::vector<TermMismatch> compare_terms(const MultiPoly& expected, const MultiPoly& got) {
  const MultiPoly diff = got - expected;
  const MultiPoly e = expected.reordered(diff.variables());
  const MultiPoly g = got.reordered(diff.variables());
  std::vector<TermMismatch> out;
  for (const auto& [exps, c] : diff.terms()) {
    auto ie = e.terms().find(exps);
    auto ig = g.terms().find(exps);
    out.push_back({diff.monomial_string(exps), ie == e.terms().end() ? BigInt(0) : ie->second,
                   ig == g.terms().end() ? BigInt(0) : ig->second});
  }
  return out;
}

C2ExpansionResult verify_prop32_expansion() {
  C2ExpansionResult r;
  r.lhs = poly_parse("(2a + (b-2)(a+2)) * (3(x-a+3) + (y-b-2)(x-a+5))", kC2CaseVars);
  r.rhs = poly_parse("3(x+1) + (y-3)(x+3)", kC2CaseVars);
  r.difference = substitute_c2(r.lhs - r.rhs);
  r.expected = poly_parse(kC2ExpectedExpansion, kC2Vars);
  r.mismatches = compare_terms(r.expected, r.difference);
  return r;
}

MultiPoly c2_vw_simplification_residual() {
  return poly_parse("(x-a+4) + (y-b-2)(x-a+5) + (x-a+4) + (x-a+2)", kC2CaseVars) -
         poly_parse("3(x-a+3) + (y-b-2)(x-a+5)", kC2CaseVars);
}

MultiPoly c2_row_sum_difference() {
  const MultiPoly lhs = poly_parse("(2a + (b-2)(a+2)) * ((x-a+4) + (y-b-2)(x-a+5) + (x-a+4) + (x-a+2))", kC2CaseVars);
  const MultiPoly rhs = poly_parse("3(x+1) + (y-3)(x+3)", kC2CaseVars);
  return substitute_c2(lhs - rhs);
}

A2IdentityResult verify_prop31_identities() {
  A2IdentityResult r;
  r.lhs_product = poly_parse("(xy + x - y^2 + 2y + 1)(ab + a - b^2 + b + 1)", kA2Vars);
  r.lhs_decomposed = poly_parse(
      "(x-y+1)(a-b+2)(y+1)b + 2y(a-b+2)(b+1) + (x-y+1)(a-b+1)(y+1) - 2(y+1) + 2", kA2Vars);
  r.rhs_direct = poly_parse("(x+a)(y+b) + (x+a) - (y+b)^2 + 2(y+b) + 1", kA2Vars);
  r.rhs_factored = poly_parse("(x-y+a-b+3)(y+b+1) - 2", kA2Vars);
  r.lhs_residual = compare_terms(r.lhs_product, r.lhs_decomposed);
  r.rhs_residual = compare_terms(r.rhs_direct, r.rhs_factored);
  r.lhs_match = r.lhs_residual.empty();
  r.rhs_match = r.rhs_residual.empty();
  return r;
}

BoxResult a2_inequality_box(std::int64_t bound) {
  BoxResult r;
  r.bound = bound;
  for (std::int64_t x = 0; x <= bound; ++x)
    for (std::int64_t y = 0; y <= bound; ++y) {
      if (x < y - 1 || (x + y) % 2 == 0) continue;
      for (std::int64_t a = 0; a <= bound; ++a)
        for (std::int64_t b = 0; b <= bound; ++b) {
          if (a < b - 1 || a + b == 0 || (a + b) % 2 == 1) continue;
          record(r, a2_strong_hull_sides(x, y, a, b), tuple_string(x, y, a, b));
        }
    }
  return r;
}

BoxResult c2_inequality_box(std::int64_t bound) {
  BoxResult r;
  r.bound = bound;
  for (std::int64_t a = 2; a <= bound; a += 4)
    for (std::int64_t b = 2; b <= bound; ++b)
      for (std::int64_t x = 1; x <= bound; x += 4) {
        if (x < a + 3) continue;
        for (std::int64_t y = b + 1; y <= bound; ++y)
          record(r, c2_case2_sides({a, b, x, y}), tuple_string(a, b, x, y));
      }
  return r;
}

}  // namespace coxhull
