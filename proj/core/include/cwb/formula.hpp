#pragma once

// Syntax of the first-order arithmetic fragment: terms over 0, S, +, * and
// variables v1, v2, ...; formulas built from t = u, negation, implication and
// universal quantification. Values of these types are uninterpreted strings
// of the formal language; nothing here evaluates truth.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "cwb/natural.hpp"
#include "cwb/sexpr.hpp"

namespace cwb::arith {

// Variable v_k, k >= 1.
using VarIndex = std::uint32_t;

struct TermNode;
struct FormulaNode;

class Term {
 public:
  enum class Kind : std::uint8_t { Var, Zero, Succ, Add, Mul };

  static Term var(VarIndex k);
  static Term zero();
  static Term succ(Term t);
  static Term add(Term t, Term u);
  static Term mul(Term t, Term u);

  Kind kind() const noexcept;
  VarIndex var_index() const noexcept;  // Var only
  const Term& left() const;             // Succ operand, or Add/Mul left
  const Term& right() const;            // Add/Mul right
  std::size_t weight() const noexcept;  // symbols, with v_k counting k
  std::size_t depth() const noexcept;

  friend bool operator==(const Term& a, const Term& b);

 private:
  explicit Term(std::shared_ptr<const TermNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const TermNode> node_;
};

class Formula {
 public:
  enum class Kind : std::uint8_t { Eq, Not, Imp, All };

  static Formula eq(Term t, Term u);
  static Formula negation(Formula f);
  static Formula implies(Formula f, Formula g);
  static Formula forall(VarIndex k, Formula f);

  Kind kind() const noexcept;
  const Term& lhs() const;               // Eq
  const Term& rhs() const;               // Eq
  const Formula& operand() const;        // Not operand, Imp antecedent, All body
  const Formula& consequent() const;     // Imp
  VarIndex bound_variable() const;       // All
  std::size_t weight() const noexcept;
  std::size_t depth() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const FormulaNode> node_;
};

struct TermNode {
  Term::Kind kind;
  VarIndex var;
  std::optional<Term> left;
  std::optional<Term> right;
  std::size_t weight;
  std::size_t depth;
};

struct FormulaNode {
  Formula::Kind kind;
  VarIndex var;
  std::optional<Term> lhs;
  std::optional<Term> rhs;
  std::optional<Formula> first;
  std::optional<Formula> second;
  std::size_t weight;
  std::size_t depth;
};

// S(S(...S(0))) with n successors.
Term numeral(std::uint64_t n);

bool occurs(VarIndex x, const Term& t);
bool occurs_free(VarIndex x, const Formula& f);
std::set<VarIndex> free_variables(const Formula& f);

// Replaces the free occurrences of x.
Term substitute(const Term& t, VarIndex x, const Term& replacement);
Formula substitute(const Formula& f, VarIndex x, const Term& replacement);

// True when no free occurrence of x in f lies in the scope of a quantifier
// binding a variable of t.
bool free_for(const Term& t, VarIndex x, const Formula& f);

// S-expression grammar: (var k) 0 (s t) (+ t u) (* t u) (= t u) (not f)
// (imp f g) (all k f).
Term parse_term(std::string_view text);
Formula parse_formula(std::string_view text);
Formula formula_from_sexpr(const sexpr::Node& node);
std::string to_sexpr(const Term& t);
std::string to_sexpr(const Formula& f);

// Conventional rendering, e.g. "(Av1 ~(0 = Sv1))".
std::string to_infix(const Term& t);
std::string to_infix(const Formula& f);

}  // namespace cwb::arith
