#pragma once

// Independent Gödel coder: its own symbol table, its own primes by trial
// division and plain repeated multiplication.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cwb/formula.hpp"

namespace oracle {

using Big = boost::multiprecision::cpp_int;

inline std::vector<std::uint64_t> primes_by_trial_division(std::size_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t c = 2; ps.size() < n; ++c) {
    bool prime = true;
    for (std::uint64_t p : ps) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) ps.push_back(c);
  }
  return ps;
}

inline void term_symbols(const cwb::arith::Term& t, std::vector<std::uint64_t>& out) {
  using K = cwb::arith::Term::Kind;
  switch (t.kind()) {
    case K::Zero: out.push_back(1); return;
    case K::Succ: out.push_back(3); term_symbols(t.left(), out); return;
    case K::Add: out.push_back(5); term_symbols(t.left(), out); term_symbols(t.right(), out); return;
    case K::Mul: out.push_back(7); term_symbols(t.left(), out); term_symbols(t.right(), out); return;
    case K::Var: out.push_back(16 + 2 * static_cast<std::uint64_t>(t.var_index())); return;
  }
}

inline void formula_symbols(const cwb::arith::Formula& f, std::vector<std::uint64_t>& out) {
  using K = cwb::arith::Formula::Kind;
  switch (f.kind()) {
    case K::Eq: out.push_back(9); term_symbols(f.lhs(), out); term_symbols(f.rhs(), out); return;
    case K::Not: out.push_back(11); formula_symbols(f.operand(), out); return;
    case K::Imp:
      out.push_back(13);
      formula_symbols(f.operand(), out);
      formula_symbols(f.consequent(), out);
      return;
    case K::All:
      out.push_back(15);
      out.push_back(16 + 2 * static_cast<std::uint64_t>(f.bound_variable()));
      formula_symbols(f.operand(), out);
      return;
  }
}

inline Big code_of_sequence(const std::vector<std::uint64_t>& seq) {
  const auto ps = primes_by_trial_division(seq.size());
  Big n = 1;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::uint64_t k = 0; k < seq[i]; ++k) n *= ps[i];
  }
  return n;
}

inline Big code_of(const cwb::arith::Formula& f) {
  std::vector<std::uint64_t> seq;
  formula_symbols(f, seq);
  return code_of_sequence(seq);
}

// Every formula of depth <= max_depth over 0, S, =, not, imp, v1, v2.
// Atoms (0, v1, v2) have depth 1; each constructor adds one.
inline std::vector<cwb::arith::Formula> small_formulas(int max_depth) {
  using cwb::arith::Formula;
  using cwb::arith::Term;
  std::vector<std::vector<Term>> terms(max_depth + 1);  // terms[d]: depth <= d
  std::vector<std::vector<Formula>> formulas(max_depth + 1);
  for (int d = 1; d <= max_depth; ++d) {
    terms[d] = {Term::zero(), Term::var(1), Term::var(2)};
    for (const Term& t : terms[d - 1]) terms[d].push_back(Term::succ(t));
    for (const Term& t : terms[d - 1]) {
      for (const Term& u : terms[d - 1]) formulas[d].push_back(Formula::eq(t, u));
    }
    for (const Formula& f : formulas[d - 1]) formulas[d].push_back(Formula::negation(f));
    for (const Formula& f : formulas[d - 1]) {
      for (const Formula& g : formulas[d - 1]) formulas[d].push_back(Formula::implies(f, g));
    }
  }
  return formulas[max_depth];
}

}  // namespace oracle
