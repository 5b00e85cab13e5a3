#pragma once

// The zero-search / proof-search experiment. T1 evaluates G(a, y) for
// y = 0, 1, 2, ... looking for a zero; T2 searches for a proof of H(a, y)
// with v1 replaced by the numeral of a and v2 left free. The two run as a
// dovetailed race and the winner is classified:
//
//   ZeroFound                G(a, y*) = 0           (Q1-consistent)
//   SelfTerminationDetected  the TM for G(a, y) repeated an ID (Q2-shaped)
//   ProofFound               x codes a proof of H(a, y) (Q3-shaped)
//   Undetermined             both processes ran out of budget
//
// Each determinate verdict is re-checked by an independent route before it
// is returned.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "cwb/dovetail.hpp"
#include "cwb/loop_guard.hpp"
#include "cwb/processes.hpp"
#include "cwb/formula.hpp"
#include "cwb/machine.hpp"
#include "cwb/natural.hpp"
#include "cwb/proof.hpp"
#include "cwb/proof_search.hpp"
#include "cwb/recfun.hpp"

namespace cwb::harness {

enum class Backend : std::uint8_t { Rec, Tm };

std::string_view backend_name(Backend b);
std::optional<Backend> backend_from_name(std::string_view name);

struct Budgets {
  std::uint64_t t1_steps = 1'000'000;
  std::uint64_t t2_candidates = 100'000;
  std::uint64_t slice = 64;
  std::uint64_t ticks = 1'000'000;
  std::uint64_t tm_memory_cap = 1'000'000;  // IDs recorded per y
};

struct TheoremOneInstance {
  std::string name;
  Backend backend = Backend::Rec;
  std::optional<rec::RecExpr> g;
  std::optional<machine::MachineSpec> machine;
  Natural a = 0;
  arith::Formula h = arith::Formula::eq(arith::Term::zero(), arith::Term::zero());
  Budgets budgets;
  arith::Enumeration t2_mode = arith::Enumeration::Structural;
};

// Throws ValidationError unless G (or the machine) matches the backend, G is
// mu-free of arity 2, H's free variables are among v1 and v2, and slice >= 1.
void validate(const TheoremOneInstance& inst);

// H with v1 := numeral(a).
arith::Formula t2_target(const TheoremOneInstance& inst);

// "1^a 0 1^y"; the machine's value is the number of 1s left on the tape.
std::string tm_input(const Natural& a, const Natural& y);

// (y, G(a, y)) for every y tried.
using ValueTrace = std::vector<std::pair<Natural, Natural>>;

struct ZeroFound {
  Natural y;
  ValueTrace trace;
};
struct SelfTerminationDetected {
  Natural y;
  std::uint64_t first = 0;
  std::uint64_t repeat = 0;
};
struct ProofFound {
  Natural x;
};
struct Undetermined {
  std::string t1;  // why each process stopped
  std::string t2;
};
using Verdict = std::variant<ZeroFound, SelfTerminationDetected, ProofFound, Undetermined>;

std::string_view verdict_name(const Verdict& v);
std::string_view case_label(const Verdict& v);

class ZeroSearchProcess : public dovetail::Process {
 public:
  ZeroSearchProcess(std::string name, const TheoremOneInstance& inst);

  const Natural& current_y() const noexcept { return y_; }
  const ValueTrace& trace() const noexcept { return trace_; }
  const std::optional<Verdict>& verdict() const noexcept { return verdict_; }

 protected:
  dovetail::SliceResult run_slice(std::uint64_t slice) override;

 private:
  dovetail::SliceResult rec_slice(std::uint64_t slice);
  dovetail::SliceResult tm_slice(std::uint64_t slice);
  std::uint64_t remaining() const noexcept { return budget_ - used_; }

  Backend backend_;
  std::optional<rec::RecExpr> g_;
  std::optional<machine::MachineSpec> machine_;
  Natural a_;
  std::uint64_t budget_;
  std::uint64_t memory_cap_;
  std::uint64_t used_ = 0;
  Natural y_ = 0;
  std::optional<rec::Evaluation> eval_;
  std::unique_ptr<loopguard::GuardedRun> run_;
  ValueTrace trace_;
  std::optional<Verdict> verdict_;
};

std::unique_ptr<ZeroSearchProcess> build_t1(const TheoremOneInstance& inst);
std::unique_ptr<dovetail::ProofSearchProcess> build_t2(const TheoremOneInstance& inst);

struct TheoremOneRun {
  Verdict verdict;
  dovetail::RaceTrace trace;
  std::uint64_t t1_steps = 0;
  std::uint64_t t2_steps = 0;
  std::uint64_t ticks = 0;
};

// Throws std::logic_error if a certificate fails its independent re-check.
TheoremOneRun run_theorem_one(const TheoremOneInstance& inst);

// Independent re-checks, also usable on their own.
bool confirm_zero(const TheoremOneInstance& inst, const Natural& y);
bool confirm_self_termination(const TheoremOneInstance& inst, const SelfTerminationDetected& v);
bool confirm_proof(const TheoremOneInstance& inst, const Natural& x);

// Canonical text of everything that determines a run, and its FNV-1a hash.
std::string describe_instance(const TheoremOneInstance& inst);
std::string digest(const TheoremOneInstance& inst);

std::vector<TheoremOneInstance> curated_suite();

}  // namespace cwb::harness
