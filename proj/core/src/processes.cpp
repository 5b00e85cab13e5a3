#include "cwb/processes.hpp"

#include <algorithm>

namespace cwb::dovetail {

MachineProcess::MachineProcess(std::string name, machine::MachineSpec machine,
                               machine::Configuration initial, std::uint64_t budget,
                               std::uint64_t memory_cap)
    : Process(std::move(name)), run_(std::move(machine), std::move(initial), budget, memory_cap) {}

SliceResult MachineProcess::run_slice(std::uint64_t slice) {
  const std::uint64_t before = run_.steps();
  const auto outcome = run_.advance(slice);
  SliceResult r;
  r.used = run_.steps() - before;
  if (!outcome) return r;
  std::visit(
      [&](const auto& o) {
        using O = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<O, loopguard::Halted>) {
          r.status = Status::Finished;
          r.token = "halted steps=" + std::to_string(o.steps);
        } else if constexpr (std::is_same_v<O, loopguard::Stuck>) {
          r.status = Status::Finished;
          r.token = "stuck steps=" + std::to_string(o.steps);
        } else if constexpr (std::is_same_v<O, loopguard::SelfTermination>) {
          r.status = Status::Finished;
          r.token = "self-termination first=" + std::to_string(o.first_occurrence_step) +
                    " repeat=" + std::to_string(o.repeat_step);
        } else if constexpr (std::is_same_v<O, loopguard::BudgetExhausted>) {
          r.status = Status::Retired;
          r.token = "budget-exhausted steps=" + std::to_string(o.steps);
        } else {
          r.status = Status::Retired;
          r.token = "memory-exhausted ids=" + std::to_string(o.ids_recorded);
        }
      },
      *outcome);
  return r;
}

EvaluationProcess::EvaluationProcess(std::string name, rec::RecExpr term,
                                     std::vector<Natural> args, std::uint64_t budget)
    : Process(std::move(name)), eval_(std::move(term), std::move(args)), budget_(budget) {}

SliceResult EvaluationProcess::run_slice(std::uint64_t slice) {
  SliceResult r;
  const std::uint64_t before = eval_.transitions();
  const std::uint64_t allowed = std::min(slice, budget_ - before);
  if (allowed > 0 && !eval_.done()) eval_.advance(allowed);
  r.used = eval_.transitions() - before;
  if (eval_.done()) {
    r.status = Status::Finished;
    r.token = "value=" + to_string(eval_.value());
  } else if (eval_.transitions() >= budget_) {
    r.status = Status::Retired;
    r.token = "budget-exhausted steps=" + std::to_string(eval_.transitions());
  }
  return r;
}

ProofSearchProcess::ProofSearchProcess(std::string name, arith::Formula target,
                                       arith::AxiomSystem sys, arith::Enumeration mode,
                                       std::uint64_t budget)
    : Process(std::move(name)), search_(std::move(target), std::move(sys), mode), budget_(budget) {}

SliceResult ProofSearchProcess::run_slice(std::uint64_t slice) {
  SliceResult r;
  const std::uint64_t before = search_.steps();
  const std::uint64_t allowed = std::min(slice, budget_ - before);
  const auto hit = search_.advance(allowed);
  r.used = search_.steps() - before;
  if (hit) {
    r.status = Status::Finished;
    r.token = "proof x=" + to_string(hit->x);
  } else if (search_.steps() >= budget_) {
    r.status = Status::Retired;
    r.token = "budget-exhausted candidates=" + std::to_string(search_.steps());
  }
  return r;
}

}  // namespace cwb::dovetail
