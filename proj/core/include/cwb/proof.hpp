#pragma once

// Hilbert-style proofs in first-order arithmetic: logical schemas A1-A5,
// the arithmetic axioms S1-S8 and the induction schema S9, with modus ponens
// and generalization. A proof code is the prime-power number of the flat
// symbol sequence obtained by writing, line after line, the justification
// followed by the formula:
//
//   Axiom(s)  -> 17 s
//   MP(i, j)  -> 19 i j
//   Gen(i, k) -> 21 i code(v_k)
//
// Line numbers are 1-based.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cwb/formula.hpp"
#include "cwb/godel.hpp"
#include "cwb/natural.hpp"

namespace cwb::arith {

enum class Schema : std::uint8_t {
  A1 = 1, A2, A3, A4, A5,
  S1, S2, S3, S4, S5, S6, S7, S8,
  S9,  // induction
};

inline constexpr std::uint64_t kSchemaCount = 14;

std::string_view schema_name(Schema s);
std::optional<Schema> schema_from_name(std::string_view name);
std::optional<Schema> schema_from_number(std::uint64_t n);

struct AxiomJust {
  Schema schema;
  friend bool operator==(const AxiomJust&, const AxiomJust&) = default;
};
// premise: phi, implication: phi -> psi.
struct MpJust {
  std::size_t premise;
  std::size_t implication;
  friend bool operator==(const MpJust&, const MpJust&) = default;
};
struct GenJust {
  std::size_t line;
  VarIndex variable;
  friend bool operator==(const GenJust&, const GenJust&) = default;
};
using Justification = std::variant<AxiomJust, MpJust, GenJust>;

struct ProofLine {
  Formula formula;
  Justification justification;
  friend bool operator==(const ProofLine&, const ProofLine&) = default;
};

using ProofSequence = std::vector<ProofLine>;

class AxiomSystem {
 public:
  // All fourteen schemas.
  static AxiomSystem first_order_arithmetic();
  // A1-A5 only.
  static AxiomSystem pure_logic();

  const std::vector<Schema>& schemas() const noexcept { return schemas_; }
  bool admits(Schema s) const;
  bool is_instance(const Formula& f, Schema s) const;
  // First admitted schema that f instantiates.
  std::optional<Schema> find_schema(const Formula& f) const;

 private:
  explicit AxiomSystem(std::vector<Schema> schemas) : schemas_(std::move(schemas)) {}
  std::vector<Schema> schemas_;
};

// Schema membership, independent of any axiom system.
bool is_instance_of(const Formula& f, Schema s);

// The fixed formulas S1-S8 (in v1, v2, v3).
Formula arithmetic_axiom(Schema s);

struct Valid {
  Formula conclusion;
};
// line is 1-based; 0 for the empty sequence.
struct Invalid {
  std::size_t line;
  std::string reason;
};
using CheckResult = std::variant<Valid, Invalid>;

CheckResult check_proof(const ProofSequence& p, const AxiomSystem& sys);

// Checks a single line against the lines before it.
std::optional<std::string> check_line(const ProofSequence& p, std::size_t index,
                                      const AxiomSystem& sys);

std::vector<std::uint64_t> proof_symbol_codes(const ProofSequence& p);
Natural encode_proof(const ProofSequence& p);
std::variant<ProofSequence, DecodeFailure> decode_proof(const Natural& x);
std::variant<ProofSequence, DecodeFailure> read_proof(std::span<const std::uint64_t> codes);

// x codes a proof whose conclusion has code y.
bool codes_proof_of(const Natural& x, const Natural& y, const AxiomSystem& sys);

// One datum per proof line: (<formula> <justification>) with justification
// (axiom A1), (mp i j) or (gen i k).
ProofSequence parse_proof(std::string_view text);
std::string format_proof(const ProofSequence& p);
std::string format_justification(const Justification& j);

}  // namespace cwb::arith
