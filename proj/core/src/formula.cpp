#include "cwb/formula.hpp"

#include <algorithm>
#include <stdexcept>

#include "cwb/errors.hpp"
#include "cwb/sexpr.hpp"

namespace cwb::arith {

// ---------------------------------------------------------------------------
// Terms

Term Term::var(VarIndex k) {
  if (k == 0) throw ValidationError("variable indices start at 1");
  return Term(std::make_shared<const TermNode>(
      TermNode{Kind::Var, k, std::nullopt, std::nullopt, static_cast<std::size_t>(k), 1}));
}

Term Term::zero() {
  static const Term z(std::make_shared<const TermNode>(
      TermNode{Kind::Zero, 0, std::nullopt, std::nullopt, 1, 1}));
  return z;
}

Term Term::succ(Term t) {
  const std::size_t w = t.weight() + 1;
  const std::size_t d = t.depth() + 1;
  return Term(std::make_shared<const TermNode>(TermNode{Kind::Succ, 0, std::move(t), std::nullopt, w, d}));
}

Term Term::add(Term t, Term u) {
  const std::size_t w = t.weight() + u.weight() + 1;
  const std::size_t d = std::max(t.depth(), u.depth()) + 1;
  return Term(std::make_shared<const TermNode>(TermNode{Kind::Add, 0, std::move(t), std::move(u), w, d}));
}

Term Term::mul(Term t, Term u) {
  const std::size_t w = t.weight() + u.weight() + 1;
  const std::size_t d = std::max(t.depth(), u.depth()) + 1;
  return Term(std::make_shared<const TermNode>(TermNode{Kind::Mul, 0, std::move(t), std::move(u), w, d}));
}

Term::Kind Term::kind() const noexcept { return node_->kind; }
VarIndex Term::var_index() const noexcept { return node_->var; }
std::size_t Term::weight() const noexcept { return node_->weight; }
std::size_t Term::depth() const noexcept { return node_->depth; }

const Term& Term::left() const {
  if (!node_->left) throw std::logic_error("term has no operand");
  return *node_->left;
}

const Term& Term::right() const {
  if (!node_->right) throw std::logic_error("term has no right operand");
  return *node_->right;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const TermNode& x = *a.node_;
  const TermNode& y = *b.node_;
  return x.kind == y.kind && x.var == y.var && x.weight == y.weight && x.left == y.left &&
         x.right == y.right;
}

// ---------------------------------------------------------------------------
// Formulas

Formula Formula::eq(Term t, Term u) {
  const std::size_t w = t.weight() + u.weight() + 1;
  const std::size_t d = std::max(t.depth(), u.depth()) + 1;
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{Kind::Eq, 0, std::move(t), std::move(u), std::nullopt, std::nullopt, w, d}));
}

Formula Formula::negation(Formula f) {
  const std::size_t w = f.weight() + 1;
  const std::size_t d = f.depth() + 1;
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{Kind::Not, 0, std::nullopt, std::nullopt, std::move(f), std::nullopt, w, d}));
}

Formula Formula::implies(Formula f, Formula g) {
  const std::size_t w = f.weight() + g.weight() + 1;
  const std::size_t d = std::max(f.depth(), g.depth()) + 1;
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{Kind::Imp, 0, std::nullopt, std::nullopt, std::move(f), std::move(g), w, d}));
}

Formula Formula::forall(VarIndex k, Formula f) {
  if (k == 0) throw ValidationError("variable indices start at 1");
  const std::size_t w = f.weight() + 1 + k;
  const std::size_t d = f.depth() + 1;
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{Kind::All, k, std::nullopt, std::nullopt, std::move(f), std::nullopt, w, d}));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }
std::size_t Formula::weight() const noexcept { return node_->weight; }
std::size_t Formula::depth() const noexcept { return node_->depth; }

const Term& Formula::lhs() const {
  if (!node_->lhs) throw std::logic_error("formula is not an equation");
  return *node_->lhs;
}

const Term& Formula::rhs() const {
  if (!node_->rhs) throw std::logic_error("formula is not an equation");
  return *node_->rhs;
}

const Formula& Formula::operand() const {
  if (!node_->first) throw std::logic_error("formula has no subformula");
  return *node_->first;
}

const Formula& Formula::consequent() const {
  if (!node_->second) throw std::logic_error("formula is not an implication");
  return *node_->second;
}

VarIndex Formula::bound_variable() const {
  if (node_->kind != Kind::All) throw std::logic_error("formula is not quantified");
  return node_->var;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const FormulaNode& x = *a.node_;
  const FormulaNode& y = *b.node_;
  return x.kind == y.kind && x.var == y.var && x.weight == y.weight && x.lhs == y.lhs &&
         x.rhs == y.rhs && x.first == y.first && x.second == y.second;
}

// ---------------------------------------------------------------------------
// Variables and substitution

Term numeral(std::uint64_t n) {
  Term t = Term::zero();
  for (std::uint64_t i = 0; i < n; ++i) t = Term::succ(std::move(t));
  return t;
}

bool occurs(VarIndex x, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return t.var_index() == x;
    case Term::Kind::Zero:
      return false;
    case Term::Kind::Succ:
      return occurs(x, t.left());
    case Term::Kind::Add:
    case Term::Kind::Mul:
      return occurs(x, t.left()) || occurs(x, t.right());
  }
  return false;
}

bool occurs_free(VarIndex x, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return occurs(x, f.lhs()) || occurs(x, f.rhs());
    case Formula::Kind::Not:
      return occurs_free(x, f.operand());
    case Formula::Kind::Imp:
      return occurs_free(x, f.operand()) || occurs_free(x, f.consequent());
    case Formula::Kind::All:
      return f.bound_variable() != x && occurs_free(x, f.operand());
  }
  return false;
}

namespace {

void collect_vars(const Term& t, std::set<VarIndex>& out) {
  switch (t.kind()) {
    case Term::Kind::Var:
      out.insert(t.var_index());
      return;
    case Term::Kind::Zero:
      return;
    case Term::Kind::Succ:
      collect_vars(t.left(), out);
      return;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      collect_vars(t.left(), out);
      collect_vars(t.right(), out);
      return;
  }
}

void collect_free(const Formula& f, std::set<VarIndex>& bound, std::set<VarIndex>& out) {
  switch (f.kind()) {
    case Formula::Kind::Eq: {
      std::set<VarIndex> vars;
      collect_vars(f.lhs(), vars);
      collect_vars(f.rhs(), vars);
      for (VarIndex v : vars) {
        if (!bound.count(v)) out.insert(v);
      }
      return;
    }
    case Formula::Kind::Not:
      collect_free(f.operand(), bound, out);
      return;
    case Formula::Kind::Imp:
      collect_free(f.operand(), bound, out);
      collect_free(f.consequent(), bound, out);
      return;
    case Formula::Kind::All: {
      const bool inserted = bound.insert(f.bound_variable()).second;
      collect_free(f.operand(), bound, out);
      if (inserted) bound.erase(f.bound_variable());
      return;
    }
  }
}

}  // namespace

std::set<VarIndex> free_variables(const Formula& f) {
  std::set<VarIndex> bound;
  std::set<VarIndex> out;
  collect_free(f, bound, out);
  return out;
}

Term substitute(const Term& t, VarIndex x, const Term& replacement) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return t.var_index() == x ? replacement : t;
    case Term::Kind::Zero:
      return t;
    case Term::Kind::Succ:
      return Term::succ(substitute(t.left(), x, replacement));
    case Term::Kind::Add:
      return Term::add(substitute(t.left(), x, replacement), substitute(t.right(), x, replacement));
    case Term::Kind::Mul:
      return Term::mul(substitute(t.left(), x, replacement), substitute(t.right(), x, replacement));
  }
  return t;
}

Formula substitute(const Formula& f, VarIndex x, const Term& replacement) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return Formula::eq(substitute(f.lhs(), x, replacement), substitute(f.rhs(), x, replacement));
    case Formula::Kind::Not:
      return Formula::negation(substitute(f.operand(), x, replacement));
    case Formula::Kind::Imp:
      return Formula::implies(substitute(f.operand(), x, replacement),
                              substitute(f.consequent(), x, replacement));
    case Formula::Kind::All:
      if (f.bound_variable() == x) return f;
      return Formula::forall(f.bound_variable(), substitute(f.operand(), x, replacement));
  }
  return f;
}

namespace {

bool free_for_under(const std::set<VarIndex>& term_vars, VarIndex x, const Formula& f,
                    bool captured) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return !(captured && (occurs(x, f.lhs()) || occurs(x, f.rhs())));
    case Formula::Kind::Not:
      return free_for_under(term_vars, x, f.operand(), captured);
    case Formula::Kind::Imp:
      return free_for_under(term_vars, x, f.operand(), captured) &&
             free_for_under(term_vars, x, f.consequent(), captured);
    case Formula::Kind::All:
      // Occurrences of x below a binder of x are bound, not free.
      if (f.bound_variable() == x) return true;
      return free_for_under(term_vars, x, f.operand(),
                            captured || term_vars.count(f.bound_variable()) != 0);
  }
  return true;
}

}  // namespace

bool free_for(const Term& t, VarIndex x, const Formula& f) {
  std::set<VarIndex> vars;
  collect_vars(t, vars);
  return free_for_under(vars, x, f, false);
}

// ---------------------------------------------------------------------------
// Text forms

namespace {

VarIndex read_var_index(const sexpr::Node& n) {
  auto k = sexpr::atom_to_u64(n, "variable index");
  if (k == 0 || k > 1'000'000) throw ParseError("variable index out of range", n.line, n.column);
  return static_cast<VarIndex>(k);
}

void expect_arity(const sexpr::Node& n, std::size_t count) {
  if (n.items.size() != count + 1) {
    throw ParseError("'" + n.items.front().atom + "' takes " + std::to_string(count) +
                         " argument(s)",
                     n.line, n.column);
  }
}

Term build_term(const sexpr::Node& n) {
  if (n.is_atom()) {
    if (n.atom == "0") return Term::zero();
    throw ParseError("unexpected atom '" + n.atom + "' in term", n.line, n.column);
  }
  if (n.items.empty() || !n.items.front().is_atom()) throw ParseError("expected (op ...)", n.line, n.column);
  const std::string& op = n.items.front().atom;
  if (op == "var") {
    expect_arity(n, 1);
    return Term::var(read_var_index(n.items[1]));
  }
  if (op == "s") {
    expect_arity(n, 1);
    return Term::succ(build_term(n.items[1]));
  }
  if (op == "+") {
    expect_arity(n, 2);
    return Term::add(build_term(n.items[1]), build_term(n.items[2]));
  }
  if (op == "*") {
    expect_arity(n, 2);
    return Term::mul(build_term(n.items[1]), build_term(n.items[2]));
  }
  throw ParseError("unknown term operator '" + op + "'", n.line, n.column);
}

Formula build_formula(const sexpr::Node& n) {
  if (n.is_atom() || n.items.empty() || !n.items.front().is_atom()) {
    throw ParseError("expected a formula (= ...), (not ...), (imp ...) or (all ...)", n.line, n.column);
  }
  const std::string& op = n.items.front().atom;
  if (op == "=") {
    expect_arity(n, 2);
    return Formula::eq(build_term(n.items[1]), build_term(n.items[2]));
  }
  if (op == "not") {
    expect_arity(n, 1);
    return Formula::negation(build_formula(n.items[1]));
  }
  if (op == "imp") {
    expect_arity(n, 2);
    return Formula::implies(build_formula(n.items[1]), build_formula(n.items[2]));
  }
  if (op == "all") {
    expect_arity(n, 2);
    return Formula::forall(read_var_index(n.items[1]), build_formula(n.items[2]));
  }
  throw ParseError("unknown formula operator '" + op + "'", n.line, n.column);
}

}  // namespace

Term parse_term(std::string_view text) { return build_term(sexpr::parse_one(text)); }

Formula parse_formula(std::string_view text) { return build_formula(sexpr::parse_one(text)); }

Formula formula_from_sexpr(const sexpr::Node& node) { return build_formula(node); }

std::string to_sexpr(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return "(var " + std::to_string(t.var_index()) + ")";
    case Term::Kind::Zero:
      return "0";
    case Term::Kind::Succ:
      return "(s " + to_sexpr(t.left()) + ")";
    case Term::Kind::Add:
      return "(+ " + to_sexpr(t.left()) + " " + to_sexpr(t.right()) + ")";
    case Term::Kind::Mul:
      return "(* " + to_sexpr(t.left()) + " " + to_sexpr(t.right()) + ")";
  }
  return {};
}

std::string to_sexpr(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return "(= " + to_sexpr(f.lhs()) + " " + to_sexpr(f.rhs()) + ")";
    case Formula::Kind::Not:
      return "(not " + to_sexpr(f.operand()) + ")";
    case Formula::Kind::Imp:
      return "(imp " + to_sexpr(f.operand()) + " " + to_sexpr(f.consequent()) + ")";
    case Formula::Kind::All:
      return "(all " + std::to_string(f.bound_variable()) + " " + to_sexpr(f.operand()) + ")";
  }
  return {};
}

std::string to_infix(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return "v" + std::to_string(t.var_index());
    case Term::Kind::Zero:
      return "0";
    case Term::Kind::Succ:
      return "S" + to_infix(t.left());
    case Term::Kind::Add:
      return "(" + to_infix(t.left()) + " + " + to_infix(t.right()) + ")";
    case Term::Kind::Mul:
      return "(" + to_infix(t.left()) + " * " + to_infix(t.right()) + ")";
  }
  return {};
}

std::string to_infix(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return "(" + to_infix(f.lhs()) + " = " + to_infix(f.rhs()) + ")";
    case Formula::Kind::Not:
      return "~" + to_infix(f.operand());
    case Formula::Kind::Imp:
      return "(" + to_infix(f.operand()) + " -> " + to_infix(f.consequent()) + ")";
    case Formula::Kind::All:
      return "(Av" + std::to_string(f.bound_variable()) + " " + to_infix(f.operand()) + ")";
  }
  return {};
}

}  // namespace cwb::arith
