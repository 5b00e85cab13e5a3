#include "cwb/theorem_one.hpp"

#include <cstdio>
#include <sstream>

#include "cwb/embedded_data.hpp"
#include "cwb/errors.hpp"
#include "cwb/godel.hpp"
#include "cwb/loop_guard.hpp"

namespace cwb::harness {

namespace {

using dovetail::SliceResult;
using dovetail::Status;

SliceResult stop(std::uint64_t used, Status status, std::string token) {
  return SliceResult{used, status, std::move(token)};
}

std::uint64_t count_ones(const machine::MachineSpec& m, const machine::Configuration& c) {
  return machine::count_symbol(c, *m.find_symbol("1"));
}

}  // namespace

std::string_view backend_name(Backend b) { return b == Backend::Rec ? "rec" : "tm"; }

std::optional<Backend> backend_from_name(std::string_view name) {
  if (name == "rec") return Backend::Rec;
  if (name == "tm") return Backend::Tm;
  return std::nullopt;
}

void validate(const TheoremOneInstance& inst) {
  if (inst.backend == Backend::Rec) {
    if (!inst.g) throw ValidationError("the rec backend needs a term G");
    if (inst.g->arity() != 2) {
      throw ValidationError("G must have arity 2, not " + std::to_string(inst.g->arity()));
    }
    if (inst.g->contains_mu()) throw ValidationError("G must be mu-free");
  } else {
    if (!inst.machine) throw ValidationError("the tm backend needs a machine");
    const auto& m = *inst.machine;
    for (const char* s : {"0", "1"}) {
      auto id = m.find_symbol(s);
      if (!id || *id == 0) {
        throw ValidationError(std::string("the machine must have the input symbol ") + s);
      }
    }
  }
  for (arith::VarIndex v : arith::free_variables(inst.h)) {
    if (v != 1 && v != 2) {
      throw ValidationError("H may only have v1 and v2 free, found v" + std::to_string(v));
    }
  }
  if (inst.budgets.slice == 0) throw ValidationError("slice must be at least 1");
}

arith::Formula t2_target(const TheoremOneInstance& inst) {
  return arith::substitute(inst.h, 1, arith::numeral(to_u64(inst.a, "a")));
}

std::string tm_input(const Natural& a, const Natural& y) {
  return std::string(to_u64(a, "a"), '1') + "0" + std::string(to_u64(y, "y"), '1');
}

std::string_view verdict_name(const Verdict& v) {
  switch (v.index()) {
    case 0: return "ZeroFound";
    case 1: return "SelfTerminationDetected";
    case 2: return "ProofFound";
    default: return "Undetermined";
  }
}

std::string_view case_label(const Verdict& v) {
  switch (v.index()) {
    case 0: return "Q1-consistent";
    case 1: return "Q2-shaped";
    case 2: return "Q3-shaped";
    default: return "none";
  }
}

ZeroSearchProcess::ZeroSearchProcess(std::string name, const TheoremOneInstance& inst)
    : Process(std::move(name)),
      backend_(inst.backend),
      g_(inst.g),
      machine_(inst.machine),
      a_(inst.a),
      budget_(inst.budgets.t1_steps),
      memory_cap_(inst.budgets.tm_memory_cap) {}

SliceResult ZeroSearchProcess::run_slice(std::uint64_t slice) {
  return backend_ == Backend::Rec ? rec_slice(slice) : tm_slice(slice);
}

SliceResult ZeroSearchProcess::rec_slice(std::uint64_t slice) {
  std::uint64_t used = 0;
  while (used < slice) {
    if (remaining() == 0) break;
    if (!eval_) eval_.emplace(*g_, std::vector<Natural>{a_, y_});
    const std::uint64_t before = eval_->transitions();
    eval_->advance(std::min(slice - used, remaining()));
    const std::uint64_t d = eval_->transitions() - before;
    used += d;
    used_ += d;
    if (!eval_->done()) continue;
    Natural value = eval_->value();
    trace_.emplace_back(y_, value);
    eval_.reset();
    if (value == 0) {
      verdict_ = ZeroFound{y_, trace_};
      return stop(used, Status::Finished, "zero y=" + to_string(y_));
    }
    ++y_;
  }
  if (remaining() == 0) {
    return stop(used, Status::Retired, "budget-exhausted y=" + to_string(y_));
  }
  return stop(used, Status::Running, {});
}

// Starting the run for each y costs one step on top of its transitions.
SliceResult ZeroSearchProcess::tm_slice(std::uint64_t slice) {
  std::uint64_t used = 0;
  while (used < slice) {
    if (!run_) {
      if (remaining() == 0) break;
      ++used;
      ++used_;
      run_ = std::make_unique<loopguard::GuardedRun>(
          *machine_, machine::initial_configuration(*machine_, tm_input(a_, y_)), remaining(),
          memory_cap_);
      continue;
    }
    const std::uint64_t before = run_->steps();
    const auto outcome = run_->advance(slice - used);
    const std::uint64_t d = run_->steps() - before;
    used += d;
    used_ += d;
    if (!outcome) continue;
    if (const auto* h = std::get_if<loopguard::Halted>(&*outcome)) {
      Natural value = count_ones(*machine_, h->final);
      trace_.emplace_back(y_, value);
      run_.reset();
      if (value == 0) {
        verdict_ = ZeroFound{y_, trace_};
        return stop(used, Status::Finished, "zero y=" + to_string(y_));
      }
      ++y_;
      continue;
    }
    if (const auto* loop = std::get_if<loopguard::SelfTermination>(&*outcome)) {
      verdict_ = SelfTerminationDetected{y_, loop->first_occurrence_step, loop->repeat_step};
      return stop(used, Status::Finished,
                  "self-termination y=" + to_string(y_) +
                      " first=" + std::to_string(loop->first_occurrence_step) +
                      " repeat=" + std::to_string(loop->repeat_step));
    }
    return stop(used, Status::Retired,
                std::string(loopguard::verdict_name(*outcome)) + " y=" + to_string(y_));
  }
  if (!run_ && remaining() == 0) {
    return stop(used, Status::Retired, "budget-exhausted y=" + to_string(y_));
  }
  return stop(used, Status::Running, {});
}

std::unique_ptr<ZeroSearchProcess> build_t1(const TheoremOneInstance& inst) {
  validate(inst);
  return std::make_unique<ZeroSearchProcess>("T1", inst);
}

std::unique_ptr<dovetail::ProofSearchProcess> build_t2(const TheoremOneInstance& inst) {
  validate(inst);
  return std::make_unique<dovetail::ProofSearchProcess>(
      "T2", t2_target(inst), arith::AxiomSystem::first_order_arithmetic(), inst.t2_mode,
      inst.budgets.t2_candidates);
}

bool confirm_zero(const TheoremOneInstance& inst, const Natural& y) {
  if (inst.backend == Backend::Rec) {
    const std::vector<Natural> args{inst.a, y};
    return rec::eval_total(*inst.g, args) == 0;
  }
  const auto outcome = machine::run(*inst.machine, tm_input(inst.a, y), inst.budgets.t1_steps);
  const auto* h = std::get_if<machine::Halted>(&outcome);
  return h && count_ones(*inst.machine, h->final) == 0;
}

bool confirm_self_termination(const TheoremOneInstance& inst, const SelfTerminationDetected& v) {
  if (!inst.machine) return false;
  return loopguard::replay_confirms(
      *inst.machine, machine::initial_configuration(*inst.machine, tm_input(inst.a, v.y)),
      v.first, v.repeat);
}

bool confirm_proof(const TheoremOneInstance& inst, const Natural& x) {
  return arith::codes_proof_of(x, arith::encode_formula(t2_target(inst)),
                               arith::AxiomSystem::first_order_arithmetic());
}

TheoremOneRun run_theorem_one(const TheoremOneInstance& inst) {
  auto t1 = build_t1(inst);
  auto t2 = build_t2(inst);
  dovetail::Process* processes[] = {t1.get(), t2.get()};
  auto result = dovetail::race(processes, inst.budgets.slice, inst.budgets.ticks);

  TheoremOneRun run{Undetermined{}, std::move(result.trace), t1->steps(), t2->steps(), 0};
  run.ticks = run.trace.ticks.size();
  if (const auto* w = std::get_if<dovetail::Winner>(&result.outcome)) {
    if (w->process == 0) {
      run.verdict = *t1->verdict();
    } else {
      run.verdict = ProofFound{t2->search().result()->x};
    }
  } else {
    auto why = [](const dovetail::Process& p) {
      return p.status() == Status::Running ? std::string("tick-budget") : p.token();
    };
    run.verdict = Undetermined{why(*t1), why(*t2)};
  }

  bool confirmed = true;
  if (const auto* z = std::get_if<ZeroFound>(&run.verdict)) {
    confirmed = confirm_zero(inst, z->y);
  } else if (const auto* s = std::get_if<SelfTerminationDetected>(&run.verdict)) {
    confirmed = confirm_self_termination(inst, *s);
  } else if (const auto* p = std::get_if<ProofFound>(&run.verdict)) {
    confirmed = confirm_proof(inst, p->x);
  }
  if (!confirmed) {
    throw std::logic_error("certificate of " + std::string(verdict_name(run.verdict)) +
                           " failed its re-check for " + inst.name);
  }
  return run;
}

std::string describe_instance(const TheoremOneInstance& inst) {
  std::ostringstream out;
  out << "backend: " << backend_name(inst.backend) << '\n';
  if (inst.g) out << "g: " << rec::to_sexpr(*inst.g) << '\n';
  if (inst.machine) out << "machine:\n" << machine::format_machine(*inst.machine);
  out << "a: " << to_string(inst.a) << '\n';
  out << "h: " << arith::to_sexpr(inst.h) << '\n';
  const Budgets& b = inst.budgets;
  out << "budgets: t1=" << b.t1_steps << " t2=" << b.t2_candidates << " slice=" << b.slice
      << " ticks=" << b.ticks << " memory=" << b.tm_memory_cap << '\n';
  out << "t2-mode: " << arith::enumeration_name(inst.t2_mode) << '\n';
  return out.str();
}

std::string digest(const TheoremOneInstance& inst) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : describe_instance(inst)) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<TheoremOneInstance> curated_suite() {
  const auto rigged = machine::parse_machine(embedded::kRiggedLoopMachine);
  const auto monus = machine::parse_machine(embedded::kUnaryMonusMachine);
  // v1 = S v1 has no proof in a consistent system.
  const auto unprovable = arith::parse_formula("(= (var 1) (s (var 1)))");

  auto rec_instance = [](std::string name, std::string_view g, std::uint64_t a,
                         arith::Formula h) {
    TheoremOneInstance inst;
    inst.name = std::move(name);
    inst.g = rec::parse_rec(g);
    inst.a = a;
    inst.h = std::move(h);
    return inst;
  };
  auto tm_instance = [](std::string name, machine::MachineSpec m, std::uint64_t a,
                        arith::Formula h) {
    TheoremOneInstance inst;
    inst.name = std::move(name);
    inst.backend = Backend::Tm;
    inst.machine = std::move(m);
    inst.a = a;
    inst.h = std::move(h);
    return inst;
  };

  std::vector<TheoremOneInstance> suite;
  suite.push_back(rec_instance("sub-a3", "sub", 3, unprovable));
  suite.push_back(rec_instance("sub-a5", "sub", 5, unprovable));
  suite.push_back(
      rec_instance("isqrt-a10", "(comp sub (proj 1 2) (comp mul (proj 2 2) (proj 2 2)))", 10,
                   unprovable));
  suite.push_back(tm_instance("monus-tm-a4", monus, 4, unprovable));
  suite.push_back(rec_instance(
      "axiom-a1", "(comp (succ) (proj 2 2))", 2,
      arith::parse_formula("(imp (= (var 1) (var 2)) (imp (= 0 0) (= (var 1) (var 2))))")));
  suite.push_back(rec_instance(
      "axiom-a4", "(comp (succ) (proj 2 2))", 1,
      arith::parse_formula("(imp (all 2 (= (var 1) (var 2))) (= (var 1) 0))")));
  suite.push_back(rec_instance(
      "induction-s9", "(comp (succ) (proj 2 2))", 1,
      arith::parse_formula("(imp (= (+ (var 1) 0) (+ 0 (var 1)))"
                           " (imp (all 2 (imp (= (+ (var 1) (var 2)) (+ (var 2) (var 1)))"
                           "                  (= (+ (var 1) (s (var 2))) (+ (s (var 2)) (var 1)))))"
                           "      (all 2 (= (+ (var 1) (var 2)) (+ (var 2) (var 1))))))")));
  suite.push_back(tm_instance("rigged-tm-a1", rigged, 1, unprovable));
  suite.push_back(rec_instance("no-zero-unprovable", "(comp (succ) (proj 2 2))", 0,
                               arith::parse_formula("(= 0 (s 0))")));
  return suite;
}

}  // namespace cwb::harness
