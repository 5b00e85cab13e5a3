#include "cwb/proof_search.hpp"

namespace cwb::arith {

namespace {

constexpr std::size_t kMinFormulaWeight = 3;

void compositions_of(std::size_t n, std::vector<std::size_t>& prefix,
                     std::vector<std::vector<std::size_t>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t part = kMinFormulaWeight; part <= n; ++part) {
    prefix.push_back(part);
    compositions_of(n - part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::string_view enumeration_name(Enumeration e) {
  return e == Enumeration::Literal ? "literal" : "structural";
}

std::optional<Enumeration> enumeration_from_name(std::string_view name) {
  if (name == "literal") return Enumeration::Literal;
  if (name == "structural") return Enumeration::Structural;
  return std::nullopt;
}

const std::vector<Term>& FormulaCatalog::terms(std::size_t weight) {
  while (terms_.size() <= weight) {
    const std::size_t w = terms_.size();
    std::vector<Term> level;
    if (w >= 1) level.push_back(Term::var(static_cast<VarIndex>(w)));
    if (w == 1) level.push_back(Term::zero());
    if (w >= 2) {
      for (const Term& t : terms_[w - 1]) level.push_back(Term::succ(t));
    }
    for (int op = 0; op < 2; ++op) {
      for (std::size_t a = 1; a + 1 < w; ++a) {
        const std::size_t b = w - 1 - a;
        for (const Term& t : terms_[a]) {
          for (const Term& u : terms_[b]) {
            level.push_back(op == 0 ? Term::add(t, u) : Term::mul(t, u));
          }
        }
      }
    }
    terms_.push_back(std::move(level));
  }
  return terms_[weight];
}

const std::vector<Formula>& FormulaCatalog::formulas(std::size_t weight) {
  terms(weight);
  while (formulas_.size() <= weight) {
    const std::size_t w = formulas_.size();
    std::vector<Formula> level;
    for (std::size_t a = 1; a + 1 < w; ++a) {
      for (const Term& t : terms_[a]) {
        for (const Term& u : terms_[w - 1 - a]) level.push_back(Formula::eq(t, u));
      }
    }
    if (w >= 1) {
      for (const Formula& f : formulas_[w - 1]) level.push_back(Formula::negation(f));
    }
    for (std::size_t a = 1; a + 1 < w; ++a) {
      for (const Formula& f : formulas_[a]) {
        for (const Formula& g : formulas_[w - 1 - a]) level.push_back(Formula::implies(f, g));
      }
    }
    for (std::size_t k = 1; k + 1 < w; ++k) {
      for (const Formula& f : formulas_[w - 1 - k]) {
        level.push_back(Formula::forall(static_cast<VarIndex>(k), f));
      }
    }
    formulas_.push_back(std::move(level));
  }
  return formulas_[weight];
}

std::optional<ProofSequence> justify(const std::vector<Formula>& lines, const AxiomSystem& sys) {
  ProofSequence proof;
  proof.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Formula& f = lines[i];
    if (auto s = sys.find_schema(f)) {
      proof.push_back(ProofLine{f, AxiomJust{*s}});
      continue;
    }
    std::optional<Justification> j;
    for (std::size_t p = 0; p < i && !j; ++p) {
      for (std::size_t q = 0; q < i; ++q) {
        const Formula& imp = lines[q];
        if (imp.kind() == Formula::Kind::Imp && imp.operand() == lines[p] &&
            imp.consequent() == f) {
          j = MpJust{p + 1, q + 1};
          break;
        }
      }
    }
    if (!j && f.kind() == Formula::Kind::All) {
      for (std::size_t p = 0; p < i; ++p) {
        if (f.operand() == lines[p]) {
          j = GenJust{p + 1, f.bound_variable()};
          break;
        }
      }
    }
    if (!j) return std::nullopt;
    proof.push_back(ProofLine{f, *j});
  }
  return proof;
}

ProofSearch::ProofSearch(Formula target, AxiomSystem sys, Enumeration mode, Natural literal_start)
    : target_(std::move(target)),
      target_code_(encode_formula(target_)),
      sys_(std::move(sys)),
      mode_(mode),
      next_x_(std::move(literal_start)) {
  if (next_x_ < 1) next_x_ = 1;
  compositions_ = {{}};
}

std::optional<Found> ProofSearch::advance(std::uint64_t max_candidates) {
  for (std::uint64_t i = 0; i < max_candidates && !result_; ++i) {
    ++steps_;
    if (mode_ == Enumeration::Literal) {
      literal_step();
    } else {
      structural_step();
    }
  }
  return result_;
}

bool ProofSearch::literal_step() {
  if (codes_proof_of(next_x_, target_code_, sys_)) {
    result_ = Found{next_x_, steps_};
    return true;
  }
  ++next_x_;
  return false;
}

void ProofSearch::next_weight() {
  ++weight_;
  compositions_.clear();
  std::vector<std::size_t> prefix;
  compositions_of(weight_, prefix, compositions_);
  composition_ = 0;
  fresh_composition_ = true;
}

bool ProofSearch::structural_step() {
  for (;;) {
    if (composition_ >= compositions_.size()) {
      next_weight();
      continue;
    }
    const auto& parts = compositions_[composition_];
    if (fresh_composition_) {
      odometer_.assign(parts.size(), 0);
      fresh_composition_ = false;
      break;
    }
    bool carried_out = true;
    for (std::size_t d = parts.size(); d-- > 0;) {
      if (++odometer_[d] < catalog_.formulas(parts[d]).size()) {
        carried_out = false;
        break;
      }
      odometer_[d] = 0;
    }
    if (!carried_out) break;
    ++composition_;
    fresh_composition_ = true;
  }

  const auto& parts = compositions_[composition_];
  std::vector<Formula> lines;
  lines.reserve(parts.size() + 1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    lines.push_back(catalog_.formulas(parts[i])[odometer_[i]]);
  }
  lines.push_back(target_);
  auto proof = justify(lines, sys_);
  if (!proof || !std::holds_alternative<Valid>(check_proof(*proof, sys_))) return false;
  result_ = Found{encode_proof(*proof), steps_};
  return true;
}

SearchOutcome proof_search(const Formula& target, const AxiomSystem& sys, std::uint64_t budget,
                           Enumeration mode, const Natural& start) {
  ProofSearch search(target, sys, mode, start);
  if (auto hit = search.advance(budget)) return *hit;
  return NotFoundWithin{budget};
}

}  // namespace cwb::arith
