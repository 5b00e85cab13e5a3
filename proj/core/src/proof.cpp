#include "cwb/proof.hpp"

#include <array>
#include <sstream>

#include "cwb/errors.hpp"
#include "cwb/sexpr.hpp"

namespace cwb::arith {

namespace {

constexpr std::array<std::string_view, kSchemaCount> kSchemaNames = {
    "A1", "A2", "A3", "A4", "A5", "S1", "S2", "S3", "S4", "S5", "S6", "S7", "S8", "S9"};

bool is_imp(const Formula& f) { return f.kind() == Formula::Kind::Imp; }
bool is_not(const Formula& f) { return f.kind() == Formula::Kind::Not; }
bool is_all(const Formula& f) { return f.kind() == Formula::Kind::All; }

// Finds t with r = s[x := t]. Under a quantifier on x the two sides must
// agree exactly.
bool match_term(const Term& s, VarIndex x, const Term& r, std::optional<Term>& t) {
  if (s.kind() == Term::Kind::Var && s.var_index() == x) {
    if (t) return *t == r;
    t = r;
    return true;
  }
  if (s.kind() != r.kind()) return false;
  switch (s.kind()) {
    case Term::Kind::Var:
      return s.var_index() == r.var_index();
    case Term::Kind::Zero:
      return true;
    case Term::Kind::Succ:
      return match_term(s.left(), x, r.left(), t);
    case Term::Kind::Add:
    case Term::Kind::Mul:
      return match_term(s.left(), x, r.left(), t) && match_term(s.right(), x, r.right(), t);
  }
  return false;
}

bool match_formula(const Formula& s, VarIndex x, const Formula& r, std::optional<Term>& t) {
  if (s.kind() != r.kind()) return false;
  switch (s.kind()) {
    case Formula::Kind::Eq:
      return match_term(s.lhs(), x, r.lhs(), t) && match_term(s.rhs(), x, r.rhs(), t);
    case Formula::Kind::Not:
      return match_formula(s.operand(), x, r.operand(), t);
    case Formula::Kind::Imp:
      return match_formula(s.operand(), x, r.operand(), t) &&
             match_formula(s.consequent(), x, r.consequent(), t);
    case Formula::Kind::All:
      if (s.bound_variable() != r.bound_variable()) return false;
      if (s.bound_variable() == x) return s == r;
      return match_formula(s.operand(), x, r.operand(), t);
  }
  return false;
}

bool a1(const Formula& f) {
  return is_imp(f) && is_imp(f.consequent()) && f.consequent().consequent() == f.operand();
}

bool a2(const Formula& f) {
  if (!is_imp(f) || !is_imp(f.operand()) || !is_imp(f.consequent())) return false;
  const Formula& lhs = f.operand();
  if (!is_imp(lhs.consequent())) return false;
  const Formula& b = lhs.operand();
  const Formula& c = lhs.consequent().operand();
  const Formula& d = lhs.consequent().consequent();
  return f.consequent() == Formula::implies(Formula::implies(b, c), Formula::implies(b, d));
}

bool a3(const Formula& f) {
  if (!is_imp(f) || !is_imp(f.operand())) return false;
  const Formula& lhs = f.operand();
  if (!is_not(lhs.operand()) || !is_not(lhs.consequent())) return false;
  const Formula& c = lhs.operand().operand();
  const Formula& b = lhs.consequent().operand();
  return f.consequent() == Formula::implies(Formula::implies(Formula::negation(c), b), c);
}

bool a4(const Formula& f) {
  if (!is_imp(f) || !is_all(f.operand())) return false;
  const VarIndex x = f.operand().bound_variable();
  const Formula& body = f.operand().operand();
  std::optional<Term> t;
  if (!match_formula(body, x, f.consequent(), t)) return false;
  if (!t) return true;  // x not free in the body: B(t) is B itself
  return free_for(*t, x, body) && substitute(body, x, *t) == f.consequent();
}

bool a5(const Formula& f) {
  if (!is_imp(f) || !is_all(f.operand()) || !is_imp(f.consequent())) return false;
  const Formula& all = f.operand();
  if (!is_imp(all.operand())) return false;
  const VarIndex x = all.bound_variable();
  const Formula& b = all.operand().operand();
  const Formula& c = all.operand().consequent();
  return !occurs_free(x, b) && f.consequent() == Formula::implies(b, Formula::forall(x, c));
}

bool s9(const Formula& f) {
  if (!is_imp(f) || !is_imp(f.consequent())) return false;
  const Formula& step = f.consequent().operand();
  const Formula& conclusion = f.consequent().consequent();
  if (!is_all(conclusion)) return false;
  const VarIndex x = conclusion.bound_variable();
  const Formula& b = conclusion.operand();
  return f.operand() == substitute(b, x, Term::zero()) &&
         step == Formula::forall(
                     x, Formula::implies(b, substitute(b, x, Term::succ(Term::var(x)))));
}

const std::array<Formula, 8>& arithmetic_axioms() {
  static const std::array<Formula, 8> axioms = [] {
    const Term v1 = Term::var(1);
    const Term v2 = Term::var(2);
    const Term v3 = Term::var(3);
    const Term z = Term::zero();
    auto eq = [](Term a, Term b) { return Formula::eq(std::move(a), std::move(b)); };
    return std::array<Formula, 8>{
        Formula::implies(eq(v1, v2), Formula::implies(eq(v1, v3), eq(v2, v3))),
        Formula::implies(eq(v1, v2), eq(Term::succ(v1), Term::succ(v2))),
        Formula::negation(eq(z, Term::succ(v1))),
        Formula::implies(eq(Term::succ(v1), Term::succ(v2)), eq(v1, v2)),
        eq(Term::add(v1, z), v1),
        eq(Term::add(v1, Term::succ(v2)), Term::succ(Term::add(v1, v2))),
        eq(Term::mul(v1, z), z),
        eq(Term::mul(v1, Term::succ(v2)), Term::add(Term::mul(v1, v2), v1)),
    };
  }();
  return axioms;
}

std::string line_ref(std::size_t n) { return "line " + std::to_string(n); }

}  // namespace

std::string_view schema_name(Schema s) {
  return kSchemaNames[static_cast<std::size_t>(s) - 1];
}

std::optional<Schema> schema_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kSchemaNames.size(); ++i) {
    if (kSchemaNames[i] == name) return static_cast<Schema>(i + 1);
  }
  return std::nullopt;
}

std::optional<Schema> schema_from_number(std::uint64_t n) {
  if (n < 1 || n > kSchemaCount) return std::nullopt;
  return static_cast<Schema>(n);
}

Formula arithmetic_axiom(Schema s) {
  const auto n = static_cast<std::size_t>(s);
  if (n < static_cast<std::size_t>(Schema::S1) || n > static_cast<std::size_t>(Schema::S8)) {
    throw std::invalid_argument("not a fixed arithmetic axiom");
  }
  return arithmetic_axioms()[n - static_cast<std::size_t>(Schema::S1)];
}

bool is_instance_of(const Formula& f, Schema s) {
  switch (s) {
    case Schema::A1: return a1(f);
    case Schema::A2: return a2(f);
    case Schema::A3: return a3(f);
    case Schema::A4: return a4(f);
    case Schema::A5: return a5(f);
    case Schema::S9: return s9(f);
    default: return f == arithmetic_axiom(s);
  }
}

AxiomSystem AxiomSystem::first_order_arithmetic() {
  std::vector<Schema> all;
  for (std::uint64_t n = 1; n <= kSchemaCount; ++n) all.push_back(static_cast<Schema>(n));
  return AxiomSystem(std::move(all));
}

AxiomSystem AxiomSystem::pure_logic() {
  return AxiomSystem({Schema::A1, Schema::A2, Schema::A3, Schema::A4, Schema::A5});
}

bool AxiomSystem::admits(Schema s) const {
  for (Schema t : schemas_) {
    if (t == s) return true;
  }
  return false;
}

bool AxiomSystem::is_instance(const Formula& f, Schema s) const {
  return admits(s) && is_instance_of(f, s);
}

std::optional<Schema> AxiomSystem::find_schema(const Formula& f) const {
  for (Schema s : schemas_) {
    if (is_instance_of(f, s)) return s;
  }
  return std::nullopt;
}

std::optional<std::string> check_line(const ProofSequence& p, std::size_t index,
                                      const AxiomSystem& sys) {
  const ProofLine& line = p.at(index);
  const std::size_t here = index + 1;
  auto earlier = [&](std::size_t n) { return n >= 1 && n < here; };

  if (const auto* ax = std::get_if<AxiomJust>(&line.justification)) {
    if (!sys.admits(ax->schema)) {
      return "schema " + std::string(schema_name(ax->schema)) + " is not in the axiom system";
    }
    if (!is_instance_of(line.formula, ax->schema)) {
      return "not an instance of " + std::string(schema_name(ax->schema));
    }
    return std::nullopt;
  }
  if (const auto* mp = std::get_if<MpJust>(&line.justification)) {
    if (!earlier(mp->premise)) return "MP premise " + line_ref(mp->premise) + " is not earlier";
    if (!earlier(mp->implication)) {
      return "MP implication " + line_ref(mp->implication) + " is not earlier";
    }
    const Formula& imp = p[mp->implication - 1].formula;
    if (!is_imp(imp)) return "MP: " + line_ref(mp->implication) + " is not an implication";
    if (!(imp.operand() == p[mp->premise - 1].formula)) {
      return "MP: antecedent of " + line_ref(mp->implication) + " differs from " +
             line_ref(mp->premise);
    }
    if (!(imp.consequent() == line.formula)) {
      return "MP: consequent of " + line_ref(mp->implication) + " differs from this line";
    }
    return std::nullopt;
  }
  const auto& gen = std::get<GenJust>(line.justification);
  if (!earlier(gen.line)) return "Gen source " + line_ref(gen.line) + " is not earlier";
  if (!is_all(line.formula) || line.formula.bound_variable() != gen.variable) {
    return "Gen: line is not a generalization on v" + std::to_string(gen.variable);
  }
  if (!(line.formula.operand() == p[gen.line - 1].formula)) {
    return "Gen: body differs from " + line_ref(gen.line);
  }
  return std::nullopt;
}

CheckResult check_proof(const ProofSequence& p, const AxiomSystem& sys) {
  if (p.empty()) return Invalid{0, "empty proof"};
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (auto reason = check_line(p, i, sys)) return Invalid{i + 1, std::move(*reason)};
  }
  return Valid{p.back().formula};
}

std::vector<std::uint64_t> proof_symbol_codes(const ProofSequence& p) {
  std::vector<std::uint64_t> out;
  for (const ProofLine& line : p) {
    std::visit(
        [&](const auto& j) {
          using J = std::decay_t<decltype(j)>;
          if constexpr (std::is_same_v<J, AxiomJust>) {
            out.push_back(code::kAxiom);
            out.push_back(static_cast<std::uint64_t>(j.schema));
          } else if constexpr (std::is_same_v<J, MpJust>) {
            out.push_back(code::kModusPonens);
            out.push_back(j.premise);
            out.push_back(j.implication);
          } else {
            out.push_back(code::kGeneralization);
            out.push_back(j.line);
            out.push_back(code::variable(j.variable));
          }
        },
        line.justification);
    append_symbol_codes(line.formula, out);
  }
  return out;
}

Natural encode_proof(const ProofSequence& p) {
  for (const ProofLine& line : p) {
    if (const auto* mp = std::get_if<MpJust>(&line.justification)) {
      if (mp->premise == 0 || mp->implication == 0) throw ValidationError("line numbers start at 1");
    } else if (const auto* gen = std::get_if<GenJust>(&line.justification)) {
      if (gen->line == 0) throw ValidationError("line numbers start at 1");
    }
  }
  return encode_sequence(proof_symbol_codes(p));
}

std::variant<ProofSequence, DecodeFailure> read_proof(std::span<const std::uint64_t> codes) {
  ProofSequence proof;
  std::size_t pos = 0;
  auto need = [&](std::size_t k) { return pos + k <= codes.size(); };
  auto truncated = [&] { return DecodeFailure{codes.size() + 1, "sequence ends inside a line"}; };
  if (codes.empty()) return DecodeFailure{1, "empty sequence"};
  while (pos < codes.size()) {
    const std::uint64_t marker = codes[pos];
    Justification j = AxiomJust{Schema::A1};
    if (marker == code::kAxiom) {
      if (!need(2)) return truncated();
      auto s = schema_from_number(codes[pos + 1]);
      if (!s) return DecodeFailure{pos + 2, "unknown schema number " + std::to_string(codes[pos + 1])};
      j = AxiomJust{*s};
      pos += 2;
    } else if (marker == code::kModusPonens) {
      if (!need(3)) return truncated();
      j = MpJust{codes[pos + 1], codes[pos + 2]};
      pos += 3;
    } else if (marker == code::kGeneralization) {
      if (!need(3)) return truncated();
      if (!code::is_variable(codes[pos + 2])) {
        return DecodeFailure{pos + 3, "Gen variable code " + std::to_string(codes[pos + 2]) +
                                          " is not a variable"};
      }
      j = GenJust{codes[pos + 1], code::variable_index(codes[pos + 2])};
      pos += 3;
    } else {
      return DecodeFailure{pos + 1, "symbol code " + std::to_string(marker) +
                                        " is not a justification marker"};
    }
    auto f = read_formula(codes, pos);
    if (auto* failure = std::get_if<DecodeFailure>(&f)) return *failure;
    proof.push_back(ProofLine{std::get<Formula>(std::move(f)), j});
  }
  return proof;
}

std::variant<ProofSequence, DecodeFailure> decode_proof(const Natural& x) {
  auto seq = decode_sequence(x);
  if (auto* failure = std::get_if<DecodeFailure>(&seq)) return *failure;
  return read_proof(std::get<std::vector<std::uint64_t>>(seq));
}

bool codes_proof_of(const Natural& x, const Natural& y, const AxiomSystem& sys) {
  auto decoded = decode_proof(x);
  const auto* proof = std::get_if<ProofSequence>(&decoded);
  if (!proof) return false;
  auto result = check_proof(*proof, sys);
  const auto* valid = std::get_if<Valid>(&result);
  return valid && encode_formula(valid->conclusion) == y;
}

ProofSequence parse_proof(std::string_view text) {
  ProofSequence proof;
  for (const sexpr::Node& item : sexpr::parse_all(text)) {
    if (!item.is_list || item.items.size() != 2) {
      throw ParseError("expected (<formula> <justification>)", item.line, item.column);
    }
    Formula f = formula_from_sexpr(item.items[0]);
    const sexpr::Node& j = item.items[1];
    if (!j.is_list || j.items.empty() || !j.items[0].is_atom()) {
      throw ParseError("expected (axiom S), (mp i j) or (gen i k)", j.line, j.column);
    }
    const std::string& head = j.items[0].atom;
    auto arity = [&](std::size_t n) {
      if (j.items.size() != n + 1) {
        throw ParseError("'" + head + "' takes " + std::to_string(n) + " arguments", j.line,
                         j.column);
      }
    };
    if (head == "axiom") {
      arity(1);
      auto s = j.items[1].is_atom() ? schema_from_name(j.items[1].atom) : std::nullopt;
      if (!s) throw ParseError("unknown schema", j.items[1].line, j.items[1].column);
      proof.push_back(ProofLine{std::move(f), AxiomJust{*s}});
    } else if (head == "mp") {
      arity(2);
      proof.push_back(ProofLine{std::move(f),
                                MpJust{sexpr::atom_to_u64(j.items[1], "line number"),
                                       sexpr::atom_to_u64(j.items[2], "line number")}});
    } else if (head == "gen") {
      arity(2);
      const std::uint64_t k = sexpr::atom_to_u64(j.items[2], "variable index");
      if (k == 0 || k > 1'000'000) {
        throw ParseError("variable index out of range", j.items[2].line, j.items[2].column);
      }
      proof.push_back(ProofLine{
          std::move(f),
          GenJust{sexpr::atom_to_u64(j.items[1], "line number"), static_cast<VarIndex>(k)}});
    } else {
      throw ParseError("unknown justification '" + head + "'", j.line, j.column);
    }
  }
  return proof;
}

std::string format_justification(const Justification& j) {
  if (const auto* ax = std::get_if<AxiomJust>(&j)) {
    return "(axiom " + std::string(schema_name(ax->schema)) + ")";
  }
  if (const auto* mp = std::get_if<MpJust>(&j)) {
    return "(mp " + std::to_string(mp->premise) + " " + std::to_string(mp->implication) + ")";
  }
  const auto& gen = std::get<GenJust>(j);
  return "(gen " + std::to_string(gen.line) + " " + std::to_string(gen.variable) + ")";
}

std::string format_proof(const ProofSequence& p) {
  std::ostringstream out;
  for (const ProofLine& line : p) {
    out << '(' << to_sexpr(line.formula) << ' ' << format_justification(line.justification)
        << ")\n";
  }
  return out.str();
}

}  // namespace cwb::arith
