#pragma once

// Loop detection by recording every instantaneous description of a run and
// stopping at the first repetition.
//
// The record is keyed by a translation-invariant polynomial fingerprint of
// the canonical ID, maintained incrementally in O(1) per step. A fingerprint
// hit is only reported as a repetition after the stored step is replayed and
// its canonical ID compared exactly with the current one, so a hash
// collision can never turn a halting machine into a reported loop.

#include <cstdint>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <variant>

#include "cwb/machine.hpp"

namespace cwb::loopguard {

struct Halted {
  machine::Configuration final;
  std::uint64_t steps = 0;
};
struct Stuck {
  machine::Configuration at;
  std::uint64_t steps = 0;
};
// The self-termination symbol: the configuration at repeat_step has the same
// canonical ID as the one at first_occurrence_step.
struct SelfTermination {
  std::uint64_t first_occurrence_step = 0;
  std::uint64_t repeat_step = 0;
};
struct BudgetExhausted {
  std::uint64_t steps = 0;
};
struct MemoryExhausted {
  std::uint64_t ids_recorded = 0;
};

using GuardedOutcome =
    std::variant<Halted, Stuck, SelfTermination, BudgetExhausted, MemoryExhausted>;

std::string_view verdict_name(const GuardedOutcome& outcome);

// Parameters of the rolling fingerprint. modulus must be prime and base
// must be nonzero modulo it. Tests shrink the modulus to force collisions.
struct Fingerprinting {
  std::uint64_t modulus = (std::uint64_t{1} << 61) - 1;
  std::uint64_t base = 1'000'003;
};

class GuardedRun {
 public:
  GuardedRun(machine::MachineSpec machine, machine::Configuration initial, std::uint64_t budget,
             std::uint64_t memory_cap, Fingerprinting fingerprinting = {});

  // Performs at most max_transitions machine steps. Returns the outcome once
  // the run is resolved; later calls return the same outcome.
  std::optional<GuardedOutcome> advance(std::uint64_t max_transitions);

  // Runs to resolution.
  GuardedOutcome finish();

  const std::optional<GuardedOutcome>& outcome() const noexcept { return outcome_; }
  std::uint64_t steps() const noexcept { return current_.steps - initial_.steps; }
  std::uint64_t ids_recorded() const noexcept { return recorded_; }
  std::uint64_t replay_confirmations() const noexcept { return confirmations_; }
  const machine::Configuration& current() const noexcept { return current_; }
  const machine::Configuration& initial() const noexcept { return initial_; }
  const machine::MachineSpec& machine() const noexcept { return machine_; }

 private:
  struct Key {
    machine::StateId state;
    std::uint64_t hash;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return static_cast<std::size_t>(k.hash * 0x9E3779B97F4A7C15ull ^ k.state);
    }
  };

  // Checks the current configuration against the record and inserts it.
  // Returns an outcome when the run resolves here.
  std::optional<GuardedOutcome> observe();
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t power(std::uint64_t b, std::int64_t e) const;

  machine::MachineSpec machine_;
  machine::Configuration initial_;
  machine::Configuration current_;
  std::uint64_t budget_;
  std::uint64_t memory_cap_;
  Fingerprinting fp_;
  std::uint64_t base_inverse_;
  std::uint64_t hash_ = 0;  // sum of symbol * base^(cell - head)
  std::unordered_multimap<Key, std::uint64_t, KeyHash> record_;
  std::uint64_t recorded_ = 0;
  std::uint64_t confirmations_ = 0;
  bool observed_current_ = false;
  std::optional<GuardedOutcome> outcome_;
};

GuardedOutcome guarded_run(const machine::MachineSpec& machine, std::string_view input,
                           std::uint64_t budget, std::uint64_t memory_cap);
GuardedOutcome guarded_run(const machine::MachineSpec& machine,
                           const machine::Configuration& initial, std::uint64_t budget,
                           std::uint64_t memory_cap);

// The configuration reached after `steps` transitions, or nullopt when the
// machine stops earlier.
std::optional<machine::Configuration> replay_to(const machine::MachineSpec& machine,
                                                machine::Configuration initial,
                                                std::uint64_t steps);

// Replays the run to first_occurrence_step, advances repeat - first more
// steps and compares canonical IDs.
bool replay_confirms(const machine::MachineSpec& machine, const machine::Configuration& initial,
                     std::uint64_t first_occurrence_step, std::uint64_t repeat_step);

// Space-bounded decision procedure. The window is cells [0, cells).
enum class SpacePolicy { Reject, TreatAsStuck };

struct SpaceBound {
  std::uint64_t cells = 1;
  SpacePolicy policy = SpacePolicy::Reject;
};

// stuck is set when the run stopped without reaching a halt state: no rule
// applied, or the head left the window under TreatAsStuck.
struct Halts {
  std::uint64_t steps = 0;
  bool stuck = false;
};
struct Loops {
  std::uint64_t first = 0;
  std::uint64_t repeat = 0;
};
struct ExceedsSpace {
  std::uint64_t step = 0;
};
using SpaceVerdict = std::variant<Halts, Loops, ExceedsSpace>;

// Non-halt states x cells x |tape alphabet|^cells + 1, saturating at 2^64-1.
std::uint64_t space_bounded_budget(const machine::MachineSpec& machine, std::uint64_t cells);

SpaceVerdict decide_space_bounded(const machine::MachineSpec& machine, std::string_view input,
                                  SpaceBound bound);
SpaceVerdict decide_space_bounded(const machine::MachineSpec& machine,
                                  const machine::Configuration& initial, SpaceBound bound);

std::string_view verdict_name(const SpaceVerdict& verdict);

}  // namespace cwb::loopguard
