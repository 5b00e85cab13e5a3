#include "cwb/loop_guard.hpp"

#include <limits>
#include <stdexcept>

#include "cwb/errors.hpp"

namespace cwb::loopguard {

using machine::Configuration;
using machine::MachineSpec;
using machine::StepKind;

__extension__ typedef unsigned __int128 Wide;

std::string_view verdict_name(const GuardedOutcome& outcome) {
  switch (outcome.index()) {
    case 0:
      return "halted";
    case 1:
      return "stuck";
    case 2:
      return "self-termination";
    case 3:
      return "budget-exhausted";
    default:
      return "memory-exhausted";
  }
}

GuardedRun::GuardedRun(MachineSpec machine, Configuration initial, std::uint64_t budget,
                       std::uint64_t memory_cap, Fingerprinting fingerprinting)
    : machine_(std::move(machine)),
      initial_(std::move(initial)),
      current_(initial_),
      budget_(budget),
      memory_cap_(memory_cap),
      fp_(fingerprinting) {
  if (memory_cap_ == 0) throw std::invalid_argument("memory cap must be at least 1");
  if (fp_.modulus < 2 || fp_.base % fp_.modulus == 0) {
    throw std::invalid_argument("fingerprint base must be a unit modulo the modulus");
  }
  machine::check_consistent(machine_, initial_);
  base_inverse_ = power(fp_.base % fp_.modulus, static_cast<std::int64_t>(fp_.modulus - 2));
  for (const auto& [cell, symbol] : current_.tape) {
    hash_ = add(hash_, mul(symbol % fp_.modulus, power(fp_.base, cell - current_.head)));
  }
}

std::uint64_t GuardedRun::mul(std::uint64_t a, std::uint64_t b) const {
  return static_cast<std::uint64_t>(static_cast<Wide>(a) * b % fp_.modulus);
}

std::uint64_t GuardedRun::add(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t s = a + b;
  if (s >= fp_.modulus || s < a) s -= fp_.modulus;
  return s;
}

std::uint64_t GuardedRun::power(std::uint64_t b, std::int64_t e) const {
  if (e < 0) {
    b = base_inverse_;
    e = -e;
  }
  std::uint64_t result = 1 % fp_.modulus;
  b %= fp_.modulus;
  auto n = static_cast<std::uint64_t>(e);
  while (n != 0) {
    if (n & 1) result = mul(result, b);
    b = mul(b, b);
    n >>= 1;
  }
  return result;
}

std::optional<GuardedOutcome> GuardedRun::observe() {
  const std::uint64_t t = steps();
  const Key key{current_.state, hash_};

  auto [first, last] = record_.equal_range(key);
  if (first != last) {
    const auto id = machine::canonical_id(current_);
    for (auto it = first; it != last; ++it) {
      ++confirmations_;
      auto earlier = replay_to(machine_, initial_, it->second);
      if (earlier && machine::canonical_id(*earlier) == id) {
        return SelfTermination{it->second, t};
      }
    }
  }

  const bool halted = machine_.is_halt(current_.state);
  const bool stuck = !halted && machine_.rule(current_.state, current_.read()) == nullptr;

  if (recorded_ < memory_cap_) {
    record_.emplace(key, t);
    ++recorded_;
  } else if (!halted && !stuck) {
    return MemoryExhausted{recorded_};
  }

  if (halted) return Halted{current_, t};
  if (stuck) return Stuck{current_, t};
  if (t >= budget_) return BudgetExhausted{t};
  return std::nullopt;
}

std::optional<GuardedOutcome> GuardedRun::advance(std::uint64_t max_transitions) {
  if (outcome_) return outcome_;
  std::uint64_t done = 0;
  for (;;) {
    if (!observed_current_) {
      observed_current_ = true;
      outcome_ = observe();
      if (outcome_) {
        // The record is only needed while the run is live.
        record_ = {};
        return outcome_;
      }
    }
    if (done == max_transitions) return std::nullopt;

    const auto t = machine::step_in_place(machine_, current_);
    if (t.kind != StepKind::Moved) {
      throw std::logic_error("guarded run stepped a terminal configuration");
    }
    const std::uint64_t delta =
        add(t.written % fp_.modulus, fp_.modulus - t.read % fp_.modulus);
    hash_ = add(hash_, delta);
    // Moving right shifts every cell one power down relative to the head.
    hash_ = mul(hash_, t.move == machine::Move::Right ? base_inverse_ : fp_.base % fp_.modulus);
    observed_current_ = false;
    ++done;
  }
}

GuardedOutcome GuardedRun::finish() {
  for (;;) {
    if (auto r = advance(std::numeric_limits<std::uint64_t>::max())) return *r;
  }
}

GuardedOutcome guarded_run(const MachineSpec& machine, const Configuration& initial,
                           std::uint64_t budget, std::uint64_t memory_cap) {
  return GuardedRun(machine, initial, budget, memory_cap).finish();
}

GuardedOutcome guarded_run(const MachineSpec& machine, std::string_view input,
                           std::uint64_t budget, std::uint64_t memory_cap) {
  return guarded_run(machine, machine::initial_configuration(machine, input), budget, memory_cap);
}

std::optional<Configuration> replay_to(const MachineSpec& machine, Configuration c,
                                       std::uint64_t steps) {
  for (std::uint64_t i = 0; i < steps; ++i) {
    if (machine::step_in_place(machine, c).kind != StepKind::Moved) return std::nullopt;
  }
  return c;
}

bool replay_confirms(const MachineSpec& machine, const Configuration& initial,
                     std::uint64_t first_occurrence_step, std::uint64_t repeat_step) {
  if (first_occurrence_step >= repeat_step) return false;
  auto at_first = replay_to(machine, initial, first_occurrence_step);
  if (!at_first) return false;
  auto at_repeat = replay_to(machine, *at_first, repeat_step - first_occurrence_step);
  if (!at_repeat) return false;
  return machine::canonical_id(*at_first) == machine::canonical_id(*at_repeat);
}

std::uint64_t space_bounded_budget(const MachineSpec& machine, std::uint64_t cells) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  Wide total = machine.non_halt_state_count();
  total *= cells;
  for (std::uint64_t i = 0; i < cells && total <= kMax; ++i) total *= machine.symbol_count();
  total += 1;
  return total > kMax ? kMax : static_cast<std::uint64_t>(total);
}

SpaceVerdict decide_space_bounded(const MachineSpec& machine, const Configuration& initial,
                                  SpaceBound bound) {
  if (bound.cells == 0) throw ValidationError("space bound must be at least one cell");
  auto outside = [&](std::int64_t cell) {
    return cell < 0 || static_cast<std::uint64_t>(cell) >= bound.cells;
  };
  if (bound.policy == SpacePolicy::TreatAsStuck) {
    for (const auto& entry : initial.tape) {
      if (outside(entry.first)) throw ValidationError("input does not fit in the space bound");
    }
  }

  const std::uint64_t budget = space_bounded_budget(machine, bound.cells);
  const std::uint64_t cap =
      budget == std::numeric_limits<std::uint64_t>::max() ? budget : budget + 1;
  GuardedRun run(machine, initial, budget, cap);

  for (;;) {
    auto result = run.advance(1);
    if (outside(run.current().head)) {
      if (bound.policy == SpacePolicy::Reject) return ExceedsSpace{run.steps()};
      return Halts{run.steps(), true};
    }
    if (!result) continue;
    if (auto* h = std::get_if<Halted>(&*result)) return Halts{h->steps, false};
    if (auto* s = std::get_if<Stuck>(&*result)) return Halts{s->steps, true};
    if (auto* l = std::get_if<SelfTermination>(&*result)) {
      return Loops{l->first_occurrence_step, l->repeat_step};
    }
    // Pigeonhole: a confined run has at most budget - 1 distinct non-halting IDs.
    throw std::logic_error("space-bounded run ended with " + std::string(verdict_name(*result)));
  }
}

SpaceVerdict decide_space_bounded(const MachineSpec& machine, std::string_view input,
                                  SpaceBound bound) {
  return decide_space_bounded(machine, machine::initial_configuration(machine, input), bound);
}

std::string_view verdict_name(const SpaceVerdict& verdict) {
  switch (verdict.index()) {
    case 0:
      return "halts";
    case 1:
      return "loops";
    default:
      return "exceeds-space";
  }
}

}  // namespace cwb::loopguard
