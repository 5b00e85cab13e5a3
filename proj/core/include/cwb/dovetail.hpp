#pragma once

// Resumable processes and a deterministic round-robin race between them.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cwb::dovetail {

enum class Status : std::uint8_t { Running, Finished, Retired };

std::string_view status_name(Status s);

struct SliceResult {
  std::uint64_t used = 0;
  Status status = Status::Running;
  std::string token;  // outcome token when Finished, reason when Retired
};

// A process performs bounded amounts of work on request. Once it leaves
// Running it is never advanced again. Names must be non-empty and free of
// whitespace.
class Process {
 public:
  explicit Process(std::string name);
  virtual ~Process() = default;
  Process(const Process&) = delete;
  Process& operator=(const Process&) = delete;

  const std::string& name() const noexcept { return name_; }
  Status status() const noexcept { return status_; }
  std::uint64_t steps() const noexcept { return steps_; }
  const std::string& token() const noexcept { return token_; }

  // Performs at most `slice` atomic steps. Throws std::logic_error when the
  // process is no longer running.
  Status advance(std::uint64_t slice);

 protected:
  virtual SliceResult run_slice(std::uint64_t slice) = 0;

 private:
  std::string name_;
  Status status_ = Status::Running;
  std::uint64_t steps_ = 0;
  std::string token_;
};

struct TickRecord {
  std::uint64_t tick = 0;  // from 1
  std::size_t process = 0;
  std::uint64_t own_steps = 0;  // cumulative, after this tick
  Status status = Status::Running;
  friend bool operator==(const TickRecord&, const TickRecord&) = default;
};

struct RaceTrace {
  std::vector<std::string> processes;
  std::vector<TickRecord> ticks;
  friend bool operator==(const RaceTrace&, const RaceTrace&) = default;
};

struct Winner {
  std::size_t process = 0;
  std::string name;
  std::string token;
  std::uint64_t local_steps = 0;
  std::uint64_t tick = 0;
};

struct AllExhausted {
  std::vector<std::uint64_t> steps;
  std::vector<Status> statuses;
  std::uint64_t ticks = 0;
};

using RaceOutcome = std::variant<Winner, AllExhausted>;

struct RaceResult {
  RaceOutcome outcome;
  RaceTrace trace;
};

// Each tick advances the next live process, in registration order, by
// `slice` steps. The first process to finish wins; retired processes drop
// out. Throws std::invalid_argument for an empty list or slice 0.
RaceResult race(std::span<Process* const> processes, std::uint64_t slice,
                std::uint64_t global_budget);

// Largest difference, over all prefixes of the trace, between the slice
// counts of live processes. Throws std::invalid_argument on a malformed trace.
std::uint64_t fairness_audit(const RaceTrace& trace);

// "# race processes: a b" then one "tick process own-steps status" line per tick.
std::string format_trace(const RaceTrace& trace);
RaceTrace parse_trace(std::string_view text);

std::string format_outcome(const RaceOutcome& outcome, const RaceTrace& trace);

}  // namespace cwb::dovetail
