#include "cwb/dovetail.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "cwb/errors.hpp"

namespace cwb::dovetail {

namespace {

bool valid_name(std::string_view name) {
  return !name.empty() &&
         std::none_of(name.begin(), name.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

Status parse_status(std::string_view s) {
  if (s == "running") return Status::Running;
  if (s == "finished") return Status::Finished;
  if (s == "retired") return Status::Retired;
  throw std::invalid_argument("unknown status '" + std::string(s) + "'");
}

}  // namespace

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Running: return "running";
    case Status::Finished: return "finished";
    case Status::Retired: return "retired";
  }
  return "?";
}

Process::Process(std::string name) : name_(std::move(name)) {
  if (!valid_name(name_)) throw std::invalid_argument("process names must be non-empty words");
}

Status Process::advance(std::uint64_t slice) {
  if (status_ != Status::Running) {
    throw std::logic_error("process " + name_ + " advanced after it stopped");
  }
  SliceResult r = run_slice(slice);
  if (r.used > slice) throw std::logic_error("process " + name_ + " overran its slice");
  steps_ += r.used;
  status_ = r.status;
  if (status_ != Status::Running) token_ = std::move(r.token);
  return status_;
}

RaceResult race(std::span<Process* const> processes, std::uint64_t slice,
                std::uint64_t global_budget) {
  if (processes.empty()) throw std::invalid_argument("race needs at least one process");
  if (slice == 0) throw std::invalid_argument("slice must be at least 1");

  RaceResult result;
  for (const Process* p : processes) result.trace.processes.push_back(p->name());

  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < processes.size(); ++i) {
    if (processes[i]->status() == Status::Running) live.push_back(i);
  }

  std::uint64_t tick = 0;
  std::size_t cursor = 0;
  while (tick < global_budget && !live.empty()) {
    ++tick;
    if (cursor >= live.size()) cursor = 0;
    const std::size_t index = live[cursor];
    Process& p = *processes[index];
    const Status s = p.advance(slice);
    result.trace.ticks.push_back(TickRecord{tick, index, p.steps(), s});
    if (s == Status::Finished) {
      result.outcome = Winner{index, p.name(), p.token(), p.steps(), tick};
      return result;
    }
    if (s == Status::Retired) {
      live.erase(live.begin() + static_cast<std::ptrdiff_t>(cursor));
    } else {
      ++cursor;
    }
  }

  AllExhausted all;
  all.ticks = tick;
  for (const Process* p : processes) {
    all.steps.push_back(p->steps());
    all.statuses.push_back(p->status());
  }
  result.outcome = std::move(all);
  return result;
}

std::uint64_t fairness_audit(const RaceTrace& trace) {
  const std::size_t n = trace.processes.size();
  std::vector<std::uint64_t> granted(n, 0);
  std::vector<std::uint64_t> last_steps(n, 0);
  std::vector<bool> live(n, true);
  std::uint64_t worst = 0;
  bool finished = false;

  for (std::size_t k = 0; k < trace.ticks.size(); ++k) {
    const TickRecord& t = trace.ticks[k];
    if (finished) throw std::invalid_argument("trace continues after a process finished");
    if (t.tick != k + 1) throw std::invalid_argument("ticks must be numbered 1, 2, 3, ...");
    if (t.process >= n) throw std::invalid_argument("tick names an unknown process");
    if (!live[t.process]) throw std::invalid_argument("retired process was scheduled");
    if (t.own_steps < last_steps[t.process]) throw std::invalid_argument("step count decreased");
    last_steps[t.process] = t.own_steps;
    ++granted[t.process];
    if (t.status == Status::Retired) live[t.process] = false;
    if (t.status == Status::Finished) finished = true;

    std::uint64_t lo = UINT64_MAX;
    std::uint64_t hi = 0;
    for (std::size_t i = 0; i < n; ++i) {
      // The tick's own process counts even if it just stopped.
      if (!live[i] && i != t.process) continue;
      lo = std::min(lo, granted[i]);
      hi = std::max(hi, granted[i]);
    }
    if (lo != UINT64_MAX) worst = std::max(worst, hi - lo);
  }
  return worst;
}

std::string format_trace(const RaceTrace& trace) {
  std::ostringstream out;
  out << "# race processes:";
  for (const auto& name : trace.processes) out << ' ' << name;
  out << '\n';
  for (const TickRecord& t : trace.ticks) {
    out << t.tick << ' ' << trace.processes.at(t.process) << ' ' << t.own_steps << ' '
        << status_name(t.status) << '\n';
  }
  return out.str();
}

RaceTrace parse_trace(std::string_view text) {
  RaceTrace trace;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream words(line);
    if (!header) {
      const std::string prefix = "# race processes:";
      if (line.rfind(prefix, 0) != 0) throw ParseError("missing trace header", line_no);
      std::istringstream names(line.substr(prefix.size()));
      for (std::string name; names >> name;) trace.processes.push_back(name);
      header = true;
      continue;
    }
    if (line[0] == '#') continue;
    std::string name, status;
    TickRecord t;
    if (!(words >> t.tick >> name >> t.own_steps >> status)) {
      throw ParseError("expected: tick process own-steps status", line_no);
    }
    auto it = std::find(trace.processes.begin(), trace.processes.end(), name);
    if (it == trace.processes.end()) throw ParseError("unknown process '" + name + "'", line_no);
    t.process = static_cast<std::size_t>(it - trace.processes.begin());
    try {
      t.status = parse_status(status);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line_no);
    }
    trace.ticks.push_back(t);
  }
  if (!header) throw ParseError("missing trace header", 0);
  return trace;
}

std::string format_outcome(const RaceOutcome& outcome, const RaceTrace& trace) {
  std::ostringstream out;
  if (const auto* w = std::get_if<Winner>(&outcome)) {
    out << "winner " << w->name << " tick " << w->tick << " steps " << w->local_steps << ": "
        << w->token;
  } else {
    const auto& all = std::get<AllExhausted>(outcome);
    out << "all-exhausted ticks " << all.ticks;
    for (std::size_t i = 0; i < all.steps.size(); ++i) {
      out << ' ' << trace.processes.at(i) << '=' << all.steps[i] << '/'
          << status_name(all.statuses[i]);
    }
  }
  return out.str();
}

}  // namespace cwb::dovetail
