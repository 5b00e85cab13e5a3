#pragma once

// Race adapters for the three resumable engines: guarded machine runs,
// small-step recursive-function evaluations and proof searches.

#include <cstdint>
#include <vector>

#include "cwb/dovetail.hpp"
#include "cwb/loop_guard.hpp"
#include "cwb/machine.hpp"
#include "cwb/proof_search.hpp"
#include "cwb/recfun.hpp"

namespace cwb::dovetail {

// One step is one machine transition. Halting, getting stuck and a detected
// repetition finish the process; exhausting the step budget or the ID
// memory retires it.
class MachineProcess : public Process {
 public:
  MachineProcess(std::string name, machine::MachineSpec machine, machine::Configuration initial,
                 std::uint64_t budget, std::uint64_t memory_cap);

  const loopguard::GuardedRun& run() const noexcept { return run_; }

 protected:
  SliceResult run_slice(std::uint64_t slice) override;

 private:
  loopguard::GuardedRun run_;
};

// One step is one evaluator transition; retires after `budget` transitions.
class EvaluationProcess : public Process {
 public:
  EvaluationProcess(std::string name, rec::RecExpr term, std::vector<Natural> args,
                    std::uint64_t budget);

  const rec::Evaluation& evaluation() const noexcept { return eval_; }

 protected:
  SliceResult run_slice(std::uint64_t slice) override;

 private:
  rec::Evaluation eval_;
  std::uint64_t budget_;
};

// One step is one proof candidate; retires after `budget` candidates.
class ProofSearchProcess : public Process {
 public:
  ProofSearchProcess(std::string name, arith::Formula target, arith::AxiomSystem sys,
                     arith::Enumeration mode, std::uint64_t budget);

  const arith::ProofSearch& search() const noexcept { return search_; }

 protected:
  SliceResult run_slice(std::uint64_t slice) override;

 private:
  arith::ProofSearch search_;
  std::uint64_t budget_;
};

}  // namespace cwb::dovetail
