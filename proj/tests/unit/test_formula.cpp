#include <gtest/gtest.h>

#include "cwb/errors.hpp"
#include "cwb/formula.hpp"

using namespace cwb;
using namespace cwb::arith;

TEST(Formula, ParseAndPrint) {
  auto f = parse_formula("(all 1 (not (= 0 (s (var 1)))))");
  EXPECT_EQ(to_sexpr(f), "(all 1 (not (= 0 (s (var 1)))))");
  EXPECT_EQ(to_infix(f), "(Av1 ~(0 = Sv1))");
  EXPECT_EQ(parse_formula(to_sexpr(f)), f);
}

TEST(Formula, ParseErrors) {
  EXPECT_THROW(parse_formula("(= 0)"), ParseError);
  EXPECT_THROW(parse_formula("(var 1)"), ParseError);
  EXPECT_THROW(parse_formula("(all 0 (= 0 0))"), ParseError);
  EXPECT_THROW(parse_formula("(= 0 0) (= 0 0)"), ParseError);
}

TEST(Formula, Numerals) {
  EXPECT_EQ(numeral(0), Term::zero());
  EXPECT_EQ(numeral(3), parse_term("(s (s (s 0)))"));
}

TEST(Formula, FreeVariables) {
  auto f = parse_formula("(imp (all 1 (= (var 1) (var 2))) (= (var 3) 0))");
  EXPECT_EQ(free_variables(f), (std::set<VarIndex>{2, 3}));
  EXPECT_FALSE(occurs_free(1, f));
  EXPECT_TRUE(occurs_free(2, f));
}

TEST(Formula, SubstitutionLeavesBoundOccurrences) {
  auto f = parse_formula("(imp (= (var 1) 0) (all 1 (= (var 1) 0)))");
  auto g = substitute(f, 1, numeral(2));
  EXPECT_EQ(g, parse_formula("(imp (= (s (s 0)) 0) (all 1 (= (var 1) 0)))"));
}

TEST(Formula, FreeFor) {
  auto f = parse_formula("(all 2 (= (var 1) (var 2)))");
  EXPECT_FALSE(free_for(Term::var(2), 1, f));
  EXPECT_TRUE(free_for(Term::var(3), 1, f));
  EXPECT_TRUE(free_for(Term::var(2), 3, f));  // v3 does not occur
}

TEST(Formula, WeightAndDepth) {
  auto f = parse_formula("(= (var 2) 0)");
  EXPECT_EQ(f.weight(), 4u);  // '=' + v2 (2) + '0'
  EXPECT_EQ(f.depth(), 2u);
}
