#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "coxhull/error.hpp"
#include "coxhull/formulas.hpp"
#include "coxhull/polynomial.hpp"
#include "coxhull/polyverify.hpp"

using namespace coxhull;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no coxhull::Error thrown";
  return ErrorKind::IoError;
}

const std::vector<std::string> kXyzw{"x", "y", "z", "w"};

MultiPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-9, 9), exp(0, 2), count(0, 5);
  MultiPoly p(kXyzw);
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Exponents e{exp(rng), exp(rng), exp(rng), exp(rng)};
    while (e[0] + e[1] + e[2] + e[3] > 4) --*std::max_element(e.begin(), e.end());
    p.add_term(e, coeff(rng));
  }
  return p;
}

std::map<std::string, BigInt> random_point(std::mt19937_64& rng, const std::vector<std::string>& vars, int lo,
                                           int hi) {
  std::uniform_int_distribution<int> v(lo, hi);
  std::map<std::string, BigInt> out;
  for (const auto& name : vars) out[name] = v(rng);
  return out;
}

}  // namespace

TEST(MultiPoly, ProductOfBinomials) {
  const MultiPoly p = poly_parse("(k+1)(p+1)", {"k", "p"});
  EXPECT_EQ(p.to_string(), "k*p + k + p + 1");
  EXPECT_EQ(p.term_count(), 4u);
}

TEST(MultiPoly, SubstituteSquare) {
  const MultiPoly a2 = poly_parse("a^2", {"a", "n"});
  const MultiPoly r = poly_substitute(a2, "a", poly_parse("4n+2", {"n"}));
  EXPECT_EQ(r, poly_parse("16n^2+16n+4", {"n"}));
  EXPECT_EQ(r.variables(), (std::vector<std::string>{"n"}));
}

TEST(MultiPoly, ZeroAndConstants) {
  EXPECT_EQ(MultiPoly().to_string(), "0");
  EXPECT_TRUE((poly_parse("x - x", {"x"})).is_zero());
  EXPECT_EQ(poly_parse("-3", {}).to_string(), "-3");
  EXPECT_EQ(poly_parse("2x^2 - x", {"x"}).to_string(), "2*x^2 - x");
}

TEST(MultiPoly, ParseImplicitAndLongestMatch) {
  EXPECT_EQ(poly_parse("16knpq", kC2Vars).coefficient({{"k", 1}, {"n", 1}, {"p", 1}, {"q", 1}}), 16);
  EXPECT_EQ(poly_parse("2(x+1)", {"x"}), poly_parse("2x+2", {"x"}));
  const MultiPoly p = poly_parse("xx1", {"x", "xx", "x1"});
  EXPECT_EQ(p.coefficient({{"xx", 1}}), 1);
  EXPECT_EQ(p, poly_parse("xx*1", {"x", "xx", "x1"}));
  EXPECT_EQ(poly_parse("-(x)^2", {"x"}).coefficient({{"x", 2}}), -1);
}

TEST(MultiPoly, ParseErrors) {
  EXPECT_EQ(kind_of([] { poly_parse("x +", {"x"}); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { poly_parse("(x", {"x"}); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { poly_parse("x^-1", {"x"}); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { poly_parse("x $ y", {"x", "y"}); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { poly_parse("x + z", {"x"}); }), ErrorKind::UnknownVariable);
}

TEST(MultiPoly, UnknownVariables) {
  const MultiPoly p = poly_parse("x + y", {"x", "y"});
  EXPECT_EQ(kind_of([&] { poly_substitute(p, "z", MultiPoly::constant(1)); }), ErrorKind::UnknownVariable);
  EXPECT_EQ(kind_of([&] { poly_eval(p, {{"x", 1}}); }), ErrorKind::UnknownVariable);
  EXPECT_EQ(kind_of([&] { p.coefficient({{"z", 1}}); }), ErrorKind::UnknownVariable);
  EXPECT_EQ(kind_of([&] { p.reordered({"x"}); }), ErrorKind::UnknownVariable);
  EXPECT_EQ(kind_of([] { MultiPoly::variable("z", {"x"}); }), ErrorKind::UnknownVariable);
}

TEST(MultiPoly, NonnegativeCoefficients) {
  EXPECT_TRUE(check_nonneg_coeffs(MultiPoly()));
  EXPECT_TRUE(check_nonneg_coeffs(poly_parse("kp + 1", {"k", "p"})));
  EXPECT_FALSE(check_nonneg_coeffs(poly_parse("kp - 1", {"k", "p"})));
}

TEST(MultiPoly, GradedLexOrder) {
  EXPECT_EQ(poly_parse("1 + q + k + kq + n^2", kC2Vars).to_string(), "k*q + n^2 + k + q + 1");
}

TEST(MultiPolyProperty, RingLaws) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(-(-a), a);
    EXPECT_EQ(a * MultiPoly::constant(1), a);
    EXPECT_TRUE((a * MultiPoly()).is_zero());
    EXPECT_EQ(a.pow(2), a * a);
  }
}

TEST(MultiPolyProperty, EvaluationIsAHomomorphism) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const MultiPoly a = random_poly(rng), b = random_poly(rng);
    const auto pt = random_point(rng, kXyzw, -5, 5);
    EXPECT_EQ(poly_eval(a + b, pt), poly_eval(a, pt) + poly_eval(b, pt));
    EXPECT_EQ(poly_eval(a * b, pt), poly_eval(a, pt) * poly_eval(b, pt));
  }
}

TEST(MultiPolyProperty, ToStringRoundTrips) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    const MultiPoly a = random_poly(rng);
    EXPECT_EQ(poly_parse(a.to_string(), kXyzw), a) << a.to_string();
  }
}

TEST(MultiPolyProperty, SubstitutionCommutesWithEvaluation) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 300; ++trial) {
    const MultiPoly a = random_poly(rng);
    const MultiPoly r = poly_parse("3y - 2w + 1", kXyzw);
    const auto pt = random_point(rng, kXyzw, -5, 5);
    auto moved = pt;
    moved["x"] = poly_eval(r, pt);
    EXPECT_EQ(poly_eval(poly_substitute(a, "x", r), pt), poly_eval(a, moved));
  }
}

TEST(C2Expansion, MatchesThePrintedTerms) {
  const C2ExpansionResult r = verify_prop32_expansion();
  EXPECT_TRUE(r.matches());
  for (const auto& m : r.mismatches) ADD_FAILURE() << m.term << ": expected " << m.expected << ", got " << m.got;
  EXPECT_EQ(r.difference.term_count(), 16u);
  EXPECT_EQ(r.difference.coefficient({{"k", 1}, {"n", 1}, {"p", 1}, {"q", 1}}), 16);
  EXPECT_EQ(r.difference.coefficient({}), 22);
  EXPECT_TRUE(check_nonneg_coeffs(r.difference));
  EXPECT_EQ(r.difference.to_string().substr(0, 11), "16*k*n*p*q ");
}

// (k, n, p, q) = (0, 0, 1, 0) is (a, b, x, y) = (2, 2, 5, 4): 72 - 26.
TEST(C2Expansion, EvaluatesToTheSidesDifference) {
  const C2ExpansionResult r = verify_prop32_expansion();
  EXPECT_EQ(poly_eval(r.difference, {{"k", 0}, {"n", 0}, {"p", 1}, {"q", 0}}), 46);
  std::mt19937_64 rng(35);
  std::uniform_int_distribution<int> v(0, 10);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t k = v(rng), n = v(rng), p = v(rng), q = v(rng);
    const InequalitySides s = c2_case2_sides({4 * n + 2, k + 2, 4 * n + 4 * q + 5, k + p + 3});
    EXPECT_EQ(poly_eval(r.difference, {{"k", k}, {"n", n}, {"p", p}, {"q", q}}), BigInt(s.lhs - s.rhs));
  }
}

TEST(C2Expansion, ComparisonReportsMisprints) {
  const MultiPoly got = poly_parse("16knpq + 22", kC2Vars);
  const MultiPoly expected = poly_parse("16knpq + 21 + q", kC2Vars);
  const auto m = compare_terms(expected, got);
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[0].term, "q");
  EXPECT_EQ(m[0].expected, 1);
  EXPECT_EQ(m[0].got, 0);
  EXPECT_EQ(m[1].term, "1");
}

TEST(C2Expansion, RowSumFormIsOneAboveTheSimplification) {
  EXPECT_EQ(c2_vw_simplification_residual(), MultiPoly::constant(1));
  const MultiPoly row = c2_row_sum_difference();
  EXPECT_TRUE(check_nonneg_coeffs(row));
  EXPECT_EQ(poly_eval(row, {{"k", 0}, {"n", 0}, {"p", 1}, {"q", 0}}), 50);
}

TEST(A2Identities, BothHold) {
  const A2IdentityResult r = verify_prop31_identities();
  EXPECT_TRUE(r.lhs_match);
  EXPECT_TRUE(r.rhs_match);
  EXPECT_TRUE(r.lhs_residual.empty());
  EXPECT_TRUE(r.rhs_residual.empty());
  EXPECT_EQ(r.rhs_direct, r.rhs_factored);
  EXPECT_EQ(r.lhs_product, r.lhs_decomposed);
}

TEST(A2Identities, ProductMatchesClosedForms) {
  const A2IdentityResult r = verify_prop31_identities();
  for (std::int64_t x = 1; x <= 6; ++x)
    for (std::int64_t y = 0; y <= 3; ++y)
      for (std::int64_t a = 1; a <= 6; ++a)
        for (std::int64_t b = 0; b <= 3; ++b) {
          if (x < y - 1 || a < b - 1 || (x + y) % 2 == 0 || (a + b) % 2 == 1) continue;
          const InequalitySides s = a2_strong_hull_sides(x, y, a, b);
          const std::map<std::string, BigInt> pt{{"x", x}, {"y", y}, {"a", a}, {"b", b}};
          EXPECT_EQ(poly_eval(r.lhs_product, pt), s.lhs);
          EXPECT_EQ(poly_eval(r.rhs_direct, pt), s.rhs);
        }
}
