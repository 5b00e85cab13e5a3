#include <gtest/gtest.h>

#include "cwb/proof_search.hpp"

using namespace cwb;
using namespace cwb::arith;

namespace {

const AxiomSystem kSys = AxiomSystem::first_order_arithmetic();

}  // namespace

TEST(ProofSearch, LiteralModeFindsTheLeastCode) {
  // The least proof code of S3 is the code of its one-line proof: no other
  // proof of it is shorter as a symbol sequence, and every symbol code is
  // fixed. Start a little below it so the scan is short.
  auto target = parse_formula("(not (= 0 (s (var 1))))");
  const Natural x0 = encode_proof(ProofSequence{{target, AxiomJust{Schema::S3}}});
  auto out = proof_search(target, kSys, 2000, Enumeration::Literal, x0 - 1000);
  auto* f = std::get_if<Found>(&out);
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->x, x0);
  EXPECT_EQ(f->steps, 1001u);
  for (Natural x = x0 - 1000; x < x0; ++x) {
    EXPECT_FALSE(codes_proof_of(x, encode_formula(target), kSys));
  }
}

TEST(ProofSearch, LiteralModeExhaustsOnAnUnprovableTarget) {
  auto out = proof_search(parse_formula("(= 0 (s 0))"), kSys, 5000);
  auto* n = std::get_if<NotFoundWithin>(&out);
  ASSERT_NE(n, nullptr);
  EXPECT_EQ(n->budget, 5000u);
}

TEST(ProofSearch, StructuralModeFindsAxiomInstancesAtOnce) {
  auto target = parse_formula("(imp (= 0 0) (imp (= 0 0) (= 0 0)))");
  auto out = proof_search(target, kSys, 10, Enumeration::Structural);
  auto* f = std::get_if<Found>(&out);
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->steps, 1u);
  EXPECT_EQ(f->x, encode_proof(ProofSequence{{target, AxiomJust{Schema::A1}}}));
}

TEST(ProofSearch, StructuralModeFindsShortDerivations) {
  // S5 then Gen.
  auto target = parse_formula("(all 1 (= (+ (var 1) 0) (var 1)))");
  auto out = proof_search(target, kSys, 100'000, Enumeration::Structural);
  auto* f = std::get_if<Found>(&out);
  ASSERT_NE(f, nullptr);
  EXPECT_TRUE(codes_proof_of(f->x, encode_formula(target), kSys));
}

TEST(ProofSearch, ResumableSearchIsSliceInvariant) {
  auto target = parse_formula("(all 1 (= (+ (var 1) 0) (var 1)))");
  ProofSearch one(target, kSys, Enumeration::Structural);
  auto a = one.advance(100'000);
  ProofSearch many(target, kSys, Enumeration::Structural);
  std::optional<Found> b;
  while (!b) b = many.advance(7);
  ASSERT_TRUE(a);
  EXPECT_EQ(a->x, b->x);
  EXPECT_EQ(a->steps, b->steps);
}

TEST(ProofSearch, BudgetZeroExaminesNothing) {
  auto out = proof_search(parse_formula("(= 0 0)"), kSys, 0);
  EXPECT_TRUE(std::holds_alternative<NotFoundWithin>(out));
}

TEST(FormulaCatalog, CountsSmallWeights) {
  FormulaCatalog c;
  EXPECT_TRUE(c.formulas(2).empty());
  // (= a b) with a, b in {0, v1}
  EXPECT_EQ(c.formulas(3).size(), 4u);
  for (std::size_t w = 3; w <= 7; ++w) {
    for (const auto& f : c.formulas(w)) EXPECT_EQ(f.weight(), w);
  }
}

TEST(Justify, GreedyChoices) {
  const auto s5 = parse_formula("(= (+ (var 1) 0) (var 1))");
  const auto gen = parse_formula("(all 1 (= (+ (var 1) 0) (var 1)))");
  auto p = justify({s5, gen}, kSys);
  ASSERT_TRUE(p);
  EXPECT_EQ((*p)[0].justification, Justification{AxiomJust{Schema::S5}});
  EXPECT_EQ((*p)[1].justification, Justification(GenJust{1, 1}));
  EXPECT_FALSE(justify({parse_formula("(= 0 (s 0))")}, kSys));
}
