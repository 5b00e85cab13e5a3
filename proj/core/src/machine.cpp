#include "cwb/machine.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "cwb/errors.hpp"

namespace cwb::machine {

namespace {

std::string at_line(std::size_t line) {
  return line == 0 ? std::string() : "line " + std::to_string(line) + ": ";
}

template <typename Id>
std::optional<Id> index_of(const std::vector<std::string>& names, std::string_view name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<Id>(it - names.begin());
}

void require_unique(const std::vector<std::string>& names, std::string_view what) {
  std::set<std::string_view> seen;
  for (const auto& n : names) {
    if (n.empty()) throw ValidationError(std::string(what) + ": empty name");
    if (!seen.insert(n).second) {
      throw ValidationError(std::string(what) + ": duplicate '" + n + "'");
    }
  }
}

}  // namespace

MachineSpec MachineSpec::from_description(const MachineDescription& d) {
  require_unique(d.states, "states");
  require_unique(d.tape_alphabet, "tape_alphabet");
  require_unique(d.input_alphabet, "input_alphabet");
  if (d.states.empty()) throw ValidationError("no states declared");

  MachineSpec m;
  m.states_ = d.states;

  if (std::find(d.tape_alphabet.begin(), d.tape_alphabet.end(), d.blank) == d.tape_alphabet.end()) {
    throw ValidationError("blank symbol '" + d.blank + "' is not in tape_alphabet");
  }
  m.symbols_.push_back(d.blank);
  for (const auto& s : d.tape_alphabet) {
    if (s != d.blank) m.symbols_.push_back(s);
  }

  m.input_.assign(m.symbols_.size(), false);
  for (const auto& s : d.input_alphabet) {
    if (s == d.blank) throw ValidationError("input_alphabet must not contain the blank");
    auto id = index_of<SymbolId>(m.symbols_, s);
    if (!id) throw ValidationError("input symbol '" + s + "' is not in tape_alphabet");
    m.input_[*id] = true;
  }

  auto start = index_of<StateId>(m.states_, d.start);
  if (!start) throw ValidationError("start state '" + d.start + "' is not declared");
  m.start_ = *start;

  if (d.halt_states.empty()) throw ValidationError("at least one halt state is required");
  m.halting_.assign(m.states_.size(), false);
  for (const auto& h : d.halt_states) {
    auto id = index_of<StateId>(m.states_, h);
    if (!id) throw ValidationError("halt state '" + h + "' is not declared");
    m.halting_[*id] = true;
  }

  m.table_.assign(m.states_.size() * m.symbols_.size(), std::nullopt);
  for (const auto& t : d.delta) {
    auto from = index_of<StateId>(m.states_, t.state);
    auto to = index_of<StateId>(m.states_, t.next);
    auto read = index_of<SymbolId>(m.symbols_, t.read);
    auto write = index_of<SymbolId>(m.symbols_, t.write);
    if (!from) throw ValidationError(at_line(t.line) + "undeclared state '" + t.state + "'");
    if (!to) throw ValidationError(at_line(t.line) + "undeclared state '" + t.next + "'");
    if (!read) throw ValidationError(at_line(t.line) + "undeclared symbol '" + t.read + "'");
    if (!write) throw ValidationError(at_line(t.line) + "undeclared symbol '" + t.write + "'");
    if (m.halting_[*from]) {
      throw ValidationError(at_line(t.line) + "halt state '" + t.state + "' has an outgoing rule");
    }
    auto& slot = m.table_[*from * m.symbols_.size() + *read];
    if (slot) {
      throw ValidationError(at_line(t.line) + "nondeterministic delta: second rule for (" +
                            t.state + ", " + t.read + ")");
    }
    slot = Rule{*to, *write, t.move};
  }
  return m;
}

std::size_t MachineSpec::non_halt_state_count() const noexcept {
  return static_cast<std::size_t>(std::count(halting_.begin(), halting_.end(), false));
}

std::size_t MachineSpec::rule_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(table_.begin(), table_.end(), [](const auto& r) { return r.has_value(); }));
}

std::optional<StateId> MachineSpec::find_state(std::string_view name) const {
  return index_of<StateId>(states_, name);
}

std::optional<SymbolId> MachineSpec::find_symbol(std::string_view name) const {
  return index_of<SymbolId>(symbols_, name);
}

const Rule* MachineSpec::rule(StateId state, SymbolId symbol) const {
  if (state >= states_.size() || symbol >= symbols_.size()) return nullptr;
  const auto& slot = table_[state * symbols_.size() + symbol];
  return slot ? &*slot : nullptr;
}

MachineDescription MachineSpec::describe() const {
  MachineDescription d;
  d.states = states_;
  d.tape_alphabet = symbols_;
  d.blank = symbols_[kBlank];
  d.start = states_[start_];
  for (SymbolId s = 0; s < symbols_.size(); ++s) {
    if (input_[s]) d.input_alphabet.push_back(symbols_[s]);
  }
  for (StateId q = 0; q < states_.size(); ++q) {
    if (halting_[q]) d.halt_states.push_back(states_[q]);
  }
  for (StateId q = 0; q < states_.size(); ++q) {
    for (SymbolId s = 0; s < symbols_.size(); ++s) {
      if (const Rule* r = rule(q, s)) {
        d.delta.push_back({states_[q], symbols_[s], states_[r->next], symbols_[r->write], r->move, 0});
      }
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// Description documents

namespace {

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

}  // namespace

MachineSpec parse_machine(std::string_view text) {
  MachineDescription d;
  std::set<std::string> seen_keys;
  bool have_blank = false;
  bool have_start = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens_all = split_tokens(line);
    if (tokens_all.empty()) continue;

    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'key: values'", line_no);
    auto key_tokens = split_tokens(line.substr(0, colon));
    if (key_tokens.size() != 1) throw ParseError("malformed key", line_no);
    const std::string key = key_tokens.front();
    auto values = split_tokens(line.substr(colon + 1));

    if (key != "delta" && !seen_keys.insert(key).second) {
      throw ParseError("duplicate key '" + key + "'", line_no);
    }

    auto single = [&](std::string& out) {
      if (values.size() != 1) throw ParseError("'" + key + "' takes exactly one value", line_no);
      out = values.front();
    };

    if (key == "states") {
      d.states = values;
    } else if (key == "start") {
      single(d.start);
      have_start = true;
    } else if (key == "blank") {
      single(d.blank);
      have_blank = true;
    } else if (key == "tape_alphabet") {
      d.tape_alphabet = values;
    } else if (key == "input_alphabet") {
      d.input_alphabet = values;
    } else if (key == "halt") {
      d.halt_states = values;
    } else if (key == "delta") {
      if (values.size() != 6 || values[2] != "->") {
        throw ParseError("delta must read 'state symbol -> state symbol L|R'", line_no);
      }
      Move move;
      if (values[5] == "L") {
        move = Move::Left;
      } else if (values[5] == "R") {
        move = Move::Right;
      } else {
        throw ParseError("direction must be L or R, got '" + values[5] + "'", line_no);
      }
      d.delta.push_back({values[0], values[1], values[3], values[4], move, line_no});
    } else {
      throw ParseError("unknown key '" + key + "'", line_no);
    }
  }

  for (const char* required : {"states", "tape_alphabet", "input_alphabet", "halt"}) {
    if (!seen_keys.count(required)) throw ParseError(std::string("missing '") + required + ":'", 0);
  }
  if (!have_start) throw ParseError("missing 'start:'", 0);
  if (!have_blank) throw ParseError("missing 'blank:'", 0);
  return MachineSpec::from_description(d);
}

std::string format_machine(const MachineSpec& machine) {
  const MachineDescription d = machine.describe();
  auto join = [](const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) out += ' ' + s;
    return out;
  };
  std::string out;
  out += "states:" + join(d.states) + '\n';
  out += "start: " + d.start + '\n';
  out += "blank: " + d.blank + '\n';
  out += "tape_alphabet:" + join(d.tape_alphabet) + '\n';
  out += "input_alphabet:" + join(d.input_alphabet) + '\n';
  out += "halt:" + join(d.halt_states) + '\n';
  for (const auto& t : d.delta) {
    out += "delta: " + t.state + ' ' + t.read + " -> " + t.next + ' ' + t.write + ' ' +
           (t.move == Move::Left ? "L" : "R") + '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Configurations

SymbolId Configuration::read() const {
  auto it = tape.find(head);
  return it == tape.end() ? kBlank : it->second;
}

void Configuration::write(SymbolId symbol) {
  if (symbol == kBlank) {
    tape.erase(head);
  } else {
    tape[head] = symbol;
  }
}

std::vector<SymbolId> tokenize_input(const MachineSpec& machine, std::string_view input) {
  std::vector<std::string> names;
  bool has_space = std::any_of(input.begin(), input.end(),
                               [](unsigned char c) { return std::isspace(c); });
  if (has_space) {
    names = split_tokens(input);
  } else {
    for (char c : input) names.emplace_back(1, c);
  }
  std::vector<SymbolId> out;
  out.reserve(names.size());
  for (const auto& n : names) {
    auto id = machine.find_symbol(n);
    if (!id || !machine.is_input_symbol(*id)) {
      throw ValidationError("input symbol '" + n + "' is not in the input alphabet");
    }
    out.push_back(*id);
  }
  return out;
}

Configuration initial_configuration(const MachineSpec& machine, std::span<const SymbolId> input) {
  Configuration c;
  c.state = machine.start();
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (input[i] >= machine.symbol_count() || !machine.is_input_symbol(input[i])) {
      throw ValidationError("input symbol at position " + std::to_string(i) +
                            " is not in the input alphabet");
    }
    c.tape.emplace(static_cast<std::int64_t>(i), input[i]);
  }
  return c;
}

Configuration initial_configuration(const MachineSpec& machine, std::string_view input) {
  auto symbols = tokenize_input(machine, input);
  return initial_configuration(machine, symbols);
}

void check_consistent(const MachineSpec& machine, const Configuration& c) {
  if (c.state >= machine.state_count()) {
    throw InconsistentConfiguration("configuration state " + std::to_string(c.state) +
                                    " is not declared by the machine");
  }
  for (const auto& [cell, symbol] : c.tape) {
    if (symbol >= machine.symbol_count()) {
      throw InconsistentConfiguration("cell " + std::to_string(cell) + " holds undeclared symbol " +
                                      std::to_string(symbol));
    }
    if (symbol == kBlank) {
      throw InconsistentConfiguration("cell " + std::to_string(cell) +
                                      " stores an explicit blank");
    }
  }
}

Transition step_in_place(const MachineSpec& machine, Configuration& c) {
  if (c.state >= machine.state_count()) {
    throw InconsistentConfiguration("configuration state " + std::to_string(c.state) +
                                    " is not declared by the machine");
  }
  Transition t;
  t.read = c.read();
  if (t.read >= machine.symbol_count()) {
    throw InconsistentConfiguration("scanned symbol " + std::to_string(t.read) +
                                    " is not declared by the machine");
  }
  if (machine.is_halt(c.state)) {
    t.kind = StepKind::Halted;
    return t;
  }
  const Rule* rule = machine.rule(c.state, t.read);
  if (rule == nullptr) {
    t.kind = StepKind::Stuck;
    return t;
  }
  c.write(rule->write);
  c.head += rule->move == Move::Left ? -1 : 1;
  c.state = rule->next;
  ++c.steps;
  t.kind = StepKind::Moved;
  t.written = rule->write;
  t.move = rule->move;
  return t;
}

StepOutcome step(const MachineSpec& machine, const Configuration& c) {
  check_consistent(machine, c);
  Configuration next = c;
  switch (step_in_place(machine, next).kind) {
    case StepKind::Halted:
      return Halted{c};
    case StepKind::Stuck:
      return Stuck{c};
    case StepKind::Moved:
      break;
  }
  return Continue{std::move(next)};
}

CanonicalId canonical_id(const Configuration& c) {
  // left|state|scanned|right, each segment a comma list of symbol ids.
  // Segments span from the outermost non-blank cell to the head.
  std::string text;
  auto append_range = [&](std::int64_t from, std::int64_t to) {
    bool first = true;
    for (std::int64_t i = from; i <= to; ++i) {
      if (!first) text += ',';
      first = false;
      auto it = c.tape.find(i);
      text += std::to_string(it == c.tape.end() ? kBlank : it->second);
    }
  };
  if (!c.tape.empty() && c.tape.begin()->first < c.head) {
    append_range(c.tape.begin()->first, c.head - 1);
  }
  text += '|';
  text += std::to_string(c.state);
  text += '|';
  text += std::to_string(c.read());
  text += '|';
  if (!c.tape.empty() && c.tape.rbegin()->first > c.head) {
    append_range(c.head + 1, c.tape.rbegin()->first);
  }
  return CanonicalId{std::move(text)};
}

Configuration canonical_form(const Configuration& c) {
  Configuration out;
  out.state = c.state;
  out.head = 0;
  out.steps = c.steps;
  for (const auto& [cell, symbol] : c.tape) {
    if (symbol != kBlank) out.tape.emplace(cell - c.head, symbol);
  }
  return out;
}

RunOutcome run(const MachineSpec& machine, Configuration c, std::uint64_t budget) {
  check_consistent(machine, c);
  const std::uint64_t start_steps = c.steps;
  for (;;) {
    if (machine.is_halt(c.state)) return Halted{std::move(c)};
    if (machine.rule(c.state, c.read()) == nullptr) return Stuck{std::move(c)};
    if (c.steps - start_steps >= budget) return BudgetExhausted{std::move(c)};
    step_in_place(machine, c);
  }
}

RunOutcome run(const MachineSpec& machine, std::string_view input, std::uint64_t budget) {
  return run(machine, initial_configuration(machine, input), budget);
}

const Configuration& configuration_of(const RunOutcome& outcome) {
  return std::visit(
      [](const auto& o) -> const Configuration& {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, Halted>) {
          return o.final;
        } else {
          return o.at;
        }
      },
      outcome);
}

std::string_view outcome_name(const RunOutcome& outcome) {
  switch (outcome.index()) {
    case 0:
      return "halted";
    case 1:
      return "stuck";
    default:
      return "budget-exhausted";
  }
}

std::size_t count_symbol(const Configuration& c, SymbolId symbol) {
  return static_cast<std::size_t>(std::count_if(
      c.tape.begin(), c.tape.end(), [symbol](const auto& cell) { return cell.second == symbol; }));
}

std::string describe(const MachineSpec& machine, const Configuration& c) {
  std::int64_t lo = c.head;
  std::int64_t hi = c.head;
  if (!c.tape.empty()) {
    lo = std::min(lo, c.tape.begin()->first);
    hi = std::max(hi, c.tape.rbegin()->first);
  }
  std::string out;
  for (std::int64_t i = lo; i <= hi; ++i) {
    if (!out.empty()) out += ' ';
    auto it = c.tape.find(i);
    const std::string& sym = machine.symbol_name(it == c.tape.end() ? kBlank : it->second);
    if (i == c.head) {
      out += '[' + machine.state_name(c.state) + ':' + sym + ']';
    } else {
      out += sym;
    }
  }
  return out;
}

}  // namespace cwb::machine
