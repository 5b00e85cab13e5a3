#pragma once

// A deliberately naive Turing machine simulator working on names only.
// It shares nothing with the library beyond the description record, so it
// can serve as an independent judge of step counts, halting and repetition.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "cwb/machine.hpp"

namespace oracle {

struct NaiveMachine {
  std::string start;
  std::string blank;
  std::set<std::string> halts;
  std::map<std::pair<std::string, std::string>, std::tuple<std::string, std::string, int>> delta;

  explicit NaiveMachine(const cwb::machine::MachineDescription& d)
      : start(d.start), blank(d.blank), halts(d.halt_states.begin(), d.halt_states.end()) {
    for (const auto& t : d.delta) {
      delta[{t.state, t.read}] = {t.next, t.write,
                                  t.move == cwb::machine::Move::Left ? -1 : 1};
    }
  }
};

struct NaiveConfig {
  std::string state;
  long head = 0;
  std::map<long, std::string> tape;

  std::string read(const std::string& blank) const {
    auto it = tape.find(head);
    return it == tape.end() ? blank : it->second;
  }
};

inline NaiveConfig naive_start(const NaiveMachine& m, const std::vector<std::string>& input) {
  NaiveConfig c{m.start, 0, {}};
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (input[i] != m.blank) c.tape[static_cast<long>(i)] = input[i];
  }
  return c;
}

enum class Stop { Halted, Stuck, Running };

// One transition; Running when it moved.
inline Stop naive_step(const NaiveMachine& m, NaiveConfig& c) {
  if (m.halts.count(c.state)) return Stop::Halted;
  auto it = m.delta.find({c.state, c.read(m.blank)});
  if (it == m.delta.end()) return Stop::Stuck;
  const auto& [next, write, move] = it->second;
  if (write == m.blank) {
    c.tape.erase(c.head);
  } else {
    c.tape[c.head] = write;
  }
  c.state = next;
  c.head += move;
  return Stop::Running;
}

// State plus the non-blank cells written relative to the head.
inline std::string snapshot(const NaiveConfig& c) {
  std::ostringstream s;
  s << c.state << '@';
  for (const auto& [cell, sym] : c.tape) s << (cell - c.head) << '=' << sym << ';';
  return s.str();
}

struct NaiveRun {
  Stop stop = Stop::Running;
  std::uint64_t steps = 0;
  NaiveConfig final;
};

inline NaiveRun naive_run(const NaiveMachine& m, NaiveConfig c, std::uint64_t budget) {
  std::uint64_t steps = 0;
  for (;;) {
    if (m.halts.count(c.state)) return {Stop::Halted, steps, c};
    if (steps == budget) return {Stop::Running, steps, c};
    Stop s = naive_step(m, c);
    if (s != Stop::Running) return {s, steps, c};
    ++steps;
  }
}

// Snapshot after exactly `steps` transitions, if the machine gets that far.
inline std::optional<std::string> snapshot_at(const NaiveMachine& m, NaiveConfig c,
                                              std::uint64_t steps) {
  for (std::uint64_t i = 0; i < steps; ++i) {
    if (naive_step(m, c) != Stop::Running) return std::nullopt;
  }
  return snapshot(c);
}

// Brute force search for the first repeated snapshot within `budget` steps.
inline std::optional<std::pair<std::uint64_t, std::uint64_t>> first_repeat(
    const NaiveMachine& m, NaiveConfig c, std::uint64_t budget) {
  std::map<std::string, std::uint64_t> seen;
  for (std::uint64_t step = 0;; ++step) {
    auto [it, inserted] = seen.emplace(snapshot(c), step);
    if (!inserted) return std::make_pair(it->second, step);
    if (step == budget) return std::nullopt;
    if (naive_step(m, c) != Stop::Running) return std::nullopt;
  }
}

enum class WindowVerdict { Halts, Stuck, Loops, Exceeds };

// Runs inside cells [0, cells), recording every head-relative snapshot.
// A repeated snapshot means the run cycles forever on an unbounded tape.
inline std::pair<WindowVerdict, std::uint64_t> decide_window(const NaiveMachine& m, NaiveConfig c,
                                                             long cells) {
  std::set<std::string> seen;
  for (std::uint64_t step = 0;; ++step) {
    if (c.head < 0 || c.head >= cells) return {WindowVerdict::Exceeds, step};
    if (!seen.insert(snapshot(c)).second) return {WindowVerdict::Loops, step};
    Stop s = naive_step(m, c);
    if (s == Stop::Halted) return {WindowVerdict::Halts, step};
    if (s == Stop::Stuck) return {WindowVerdict::Stuck, step};
  }
}

}  // namespace oracle
