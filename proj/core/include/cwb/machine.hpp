#pragma once

// Deterministic single-tape Turing machines over a two-way infinite tape.
//
// States and symbols are interned: a MachineSpec owns the names, while
// configurations refer to them by index. The blank symbol is always index 0,
// which lets a configuration be canonicalised without its machine.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cwb::machine {

using StateId = std::uint32_t;
using SymbolId = std::uint32_t;

inline constexpr SymbolId kBlank = 0;

enum class Move : std::uint8_t { Left, Right };

struct Rule {
  StateId next = 0;
  SymbolId write = kBlank;
  Move move = Move::Right;

  friend bool operator==(const Rule&, const Rule&) = default;
};

// Name-level form of a machine, as read from a description document.
struct MachineDescription {
  struct Transition {
    std::string state;
    std::string read;
    std::string next;
    std::string write;
    Move move = Move::Right;
    std::size_t line = 0;  // source line, 0 when built in code
  };

  std::vector<std::string> states;
  std::vector<std::string> input_alphabet;
  std::vector<std::string> tape_alphabet;
  std::string blank;
  std::string start;
  std::vector<std::string> halt_states;
  std::vector<Transition> delta;
};

class MachineSpec {
 public:
  // Validates every machine invariant; throws ValidationError.
  static MachineSpec from_description(const MachineDescription& description);

  std::size_t state_count() const noexcept { return states_.size(); }
  std::size_t symbol_count() const noexcept { return symbols_.size(); }
  std::size_t non_halt_state_count() const noexcept;
  std::size_t rule_count() const noexcept;

  const std::string& state_name(StateId s) const { return states_.at(s); }
  const std::string& symbol_name(SymbolId s) const { return symbols_.at(s); }
  std::optional<StateId> find_state(std::string_view name) const;
  std::optional<SymbolId> find_symbol(std::string_view name) const;

  StateId start() const noexcept { return start_; }
  bool is_halt(StateId s) const { return halting_.at(s); }
  bool is_input_symbol(SymbolId s) const { return input_.at(s); }

  // nullptr when delta is undefined on (state, symbol).
  const Rule* rule(StateId state, SymbolId symbol) const;

  // Round-trips through from_description.
  MachineDescription describe() const;

  friend bool operator==(const MachineSpec&, const MachineSpec&) = default;

 private:
  MachineSpec() = default;

  std::vector<std::string> states_;
  std::vector<std::string> symbols_;  // symbols_[kBlank] is the blank
  std::vector<bool> halting_;
  std::vector<bool> input_;
  StateId start_ = 0;
  std::vector<std::optional<Rule>> table_;  // index: state * symbol_count + symbol
};

// Line-oriented description format ('#' starts a comment):
//   states: q0 q1 halt
//   start: q0
//   blank: _
//   tape_alphabet: _ 0 1
//   input_alphabet: 0 1
//   halt: halt
//   delta: q0 _ -> q1 _ R
// Syntax problems raise ParseError with the line number; invariant
// violations raise ValidationError.
MachineSpec parse_machine(std::string_view text);
std::string format_machine(const MachineSpec& machine);

// An instantaneous description. Cells missing from `tape` hold the blank,
// and the blank is never stored explicitly.
struct Configuration {
  StateId state = 0;
  std::int64_t head = 0;
  std::map<std::int64_t, SymbolId> tape;
  std::uint64_t steps = 0;

  SymbolId read() const;
  void write(SymbolId symbol);

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

// Splits an input string into symbols: whitespace-separated tokens when the
// text contains whitespace, one symbol per character otherwise.
// Throws ValidationError for symbols outside the input alphabet.
std::vector<SymbolId> tokenize_input(const MachineSpec& machine, std::string_view input);

Configuration initial_configuration(const MachineSpec& machine, std::span<const SymbolId> input);
Configuration initial_configuration(const MachineSpec& machine, std::string_view input);

// Thrown when a configuration mentions states or symbols the machine lacks.
class InconsistentConfiguration : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

void check_consistent(const MachineSpec& machine, const Configuration& c);

struct Continue {
  Configuration next;
};
struct Halted {
  Configuration final;
};
struct Stuck {
  Configuration at;
};
using StepOutcome = std::variant<Continue, Halted, Stuck>;

StepOutcome step(const MachineSpec& machine, const Configuration& c);

// In-place form of step() for long simulations. Only the state and the
// scanned symbol are validated.
enum class StepKind : std::uint8_t { Moved, Halted, Stuck };
struct Transition {
  StepKind kind = StepKind::Moved;
  SymbolId read = kBlank;
  SymbolId written = kBlank;
  Move move = Move::Right;
};
Transition step_in_place(const MachineSpec& machine, Configuration& c);

// Equal exactly for configurations with the same state, the same scanned
// symbol, and the same non-blank tape relative to the head.
struct CanonicalId {
  std::string text;

  friend auto operator<=>(const CanonicalId&, const CanonicalId&) = default;
};

CanonicalId canonical_id(const Configuration& c);
// Head moved to 0, tape trimmed; steps preserved. Idempotent.
Configuration canonical_form(const Configuration& c);

struct BudgetExhausted {
  Configuration at;
};
using RunOutcome = std::variant<Halted, Stuck, BudgetExhausted>;

// Iterates step() until a terminal outcome or `budget` transitions.
RunOutcome run(const MachineSpec& machine, Configuration start, std::uint64_t budget);
RunOutcome run(const MachineSpec& machine, std::string_view input, std::uint64_t budget);

const Configuration& configuration_of(const RunOutcome& outcome);
std::string_view outcome_name(const RunOutcome& outcome);

std::size_t count_symbol(const Configuration& c, SymbolId symbol);

// Human-readable tape picture, e.g. "1 0 [q0:1] 1".
std::string describe(const MachineSpec& machine, const Configuration& c);

}  // namespace cwb::machine
