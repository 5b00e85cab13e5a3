// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cwb/dovetail.hpp"
#include "cwb/godel.hpp"
#include "cwb/loop_guard.hpp"
#include "cwb/machine.hpp"
#include "cwb/processes.hpp"
#include "cwb/proof.hpp"
#include "cwb/recfun.hpp"
#include "cwb/report.hpp"
#include "cwb/theorem_one.hpp"

#include "godel_oracle.hpp"
#include "rec_oracle.hpp"
#include "tm_oracle.hpp"

namespace {

using namespace cwb;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string source_path(const std::string& rel) { return std::string(CWB_SOURCE_DIR) + "/" + rel; }

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(const std::string& criterion, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("%s %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", criterion.c_str(),
              o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::vector<std::string> split_input(const machine::MachineSpec& m, const std::string& input) {
  std::vector<std::string> out;
  for (auto id : machine::tokenize_input(m, input)) out.push_back(m.symbol_name(id));
  return out;
}

// ---------------------------------------------------------------------------

machine::MachineSpec random_machine(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n_states(1, 3);  // plus the halt state
  std::uniform_int_distribution<int> n_symbols(2, 3);
  const int k = n_states(rng);
  const int s = n_symbols(rng);
  const std::vector<std::string> all_symbols{"_", "1", "0"};

  machine::MachineDescription d;
  for (int i = 0; i < k; ++i) d.states.push_back("q" + std::to_string(i));
  d.states.push_back("h");
  d.start = "q0";
  d.halt_states = {"h"};
  d.blank = "_";
  d.tape_alphabet.assign(all_symbols.begin(), all_symbols.begin() + s);
  d.input_alphabet.assign(all_symbols.begin() + 1, all_symbols.begin() + s);
  std::uniform_int_distribution<int> pick_state(0, k);
  std::uniform_int_distribution<int> pick_symbol(0, s - 1);
  std::uniform_int_distribution<int> coin(0, 9);
  for (int q = 0; q < k; ++q) {
    for (int a = 0; a < s; ++a) {
      if (coin(rng) == 0) continue;  // leave delta undefined
      machine::MachineDescription::Transition t;
      t.state = d.states[q];
      t.read = all_symbols[a];
      // Halt rarely so that most runs either loop or run on.
      const int next = coin(rng) < 2 ? k : pick_state(rng) % k;
      t.next = d.states[next];
      t.write = all_symbols[pick_symbol(rng)];
      t.move = coin(rng) < 5 ? machine::Move::Left : machine::Move::Right;
      d.delta.push_back(t);
    }
  }
  return machine::MachineSpec::from_description(d);
}

std::string random_input(std::mt19937_64& rng, const machine::MachineSpec& m) {
  std::uniform_int_distribution<int> len(0, 4);
  std::vector<std::string> symbols;
  for (std::size_t i = 1; i < m.symbol_count(); ++i) symbols.push_back(m.symbol_name(i));
  std::uniform_int_distribution<std::size_t> pick(0, symbols.size() - 1);
  std::string input;
  for (int i = len(rng); i > 0; --i) input += (input.empty() ? "" : " ") + symbols[pick(rng)];
  return input;
}

Outcome loop_detector_soundness() {
  std::mt19937_64 rng(20240601);
  std::vector<std::pair<machine::MachineSpec, std::string>> corpus;
  for (int i = 0; i < 300; ++i) {
    auto m = random_machine(rng);
    auto input = random_input(rng, m);
    corpus.emplace_back(std::move(m), std::move(input));
  }
  for (const char* file : {"ping_pong.tm", "ping_pong_unary.tm", "right_runner.tm",
                           "binary_increment.tm", "unary_monus.tm", "rigged_loop_at_2.tm"}) {
    auto m = machine::parse_machine(read_file(source_path(std::string("data/machines/") + file)));
    for (const char* input : {"", "1", "1 0 1 1", "1 1 0 1 1"}) {
      try {
        machine::tokenize_input(m, input);
      } catch (const ValidationError&) {
        continue;
      }
      corpus.emplace_back(m, input);
    }
  }

  int loops = 0, halts = 0, failures_seen = 0;
  std::string first_failure;
  for (const auto& [m, input] : corpus) {
    const auto outcome = loopguard::guarded_run(m, input, 5000, 100'000);
    const oracle::NaiveMachine naive(m.describe());
    const auto start = oracle::naive_start(naive, split_input(m, input));
    bool ok = true;
    if (const auto* st = std::get_if<loopguard::SelfTermination>(&outcome)) {
      ++loops;
      const auto a = oracle::snapshot_at(naive, start, st->first_occurrence_step);
      const auto b = oracle::snapshot_at(naive, start, st->repeat_step);
      // The report must be a genuine repetition and the earliest one.
      const auto earliest = oracle::first_repeat(naive, start, st->repeat_step);
      ok = a && b && *a == *b && earliest &&
           earliest->first == st->first_occurrence_step &&
           earliest->second == st->repeat_step &&
           loopguard::replay_confirms(m, machine::initial_configuration(m, input),
                                      st->first_occurrence_step, st->repeat_step);
    } else if (const auto* h = std::get_if<loopguard::Halted>(&outcome)) {
      ++halts;
      const auto r = oracle::naive_run(naive, start, 5000);
      ok = r.stop == oracle::Stop::Halted && r.steps == h->steps;
    }
    if (!ok) {
      ++failures_seen;
      if (first_failure.empty()) first_failure = machine::format_machine(m) + "input: " + input;
    }
  }
  std::ostringstream d;
  d << corpus.size() << " machines, " << loops << " self-terminations, " << halts
    << " halts, " << failures_seen << " replay failures";
  if (!first_failure.empty()) d << "; first: " << first_failure;
  return {failures_seen == 0 && loops > 0 && corpus.size() >= 200, d.str()};
}

// ---------------------------------------------------------------------------

std::vector<machine::MachineSpec> all_small_machines() {
  std::vector<machine::MachineSpec> out;
  const std::vector<std::string> symbols{"_", "1"};
  for (int k = 1; k <= 2; ++k) {
    std::vector<std::string> states;
    for (int i = 0; i < k; ++i) states.push_back("q" + std::to_string(i));
    states.push_back("h");
    // Options per (state, symbol): undefined, or next x write x move.
    const int options = 1 + (k + 1) * 2 * 2;
    const int pairs = k * 2;
    long total = 1;
    for (int i = 0; i < pairs; ++i) total *= options;
    for (long code = 0; code < total; ++code) {
      machine::MachineDescription d;
      d.states = states;
      d.start = "q0";
      d.halt_states = {"h"};
      d.blank = "_";
      d.tape_alphabet = symbols;
      d.input_alphabet = {"1"};
      long c = code;
      for (int p = 0; p < pairs; ++p) {
        const int choice = static_cast<int>(c % options);
        c /= options;
        if (choice == 0) continue;
        const int x = choice - 1;
        machine::MachineDescription::Transition t;
        t.state = states[p / 2];
        t.read = symbols[p % 2];
        t.next = states[x / 4];
        t.write = symbols[(x / 2) % 2];
        t.move = x % 2 == 0 ? machine::Move::Left : machine::Move::Right;
        d.delta.push_back(t);
      }
      out.push_back(machine::MachineSpec::from_description(d));
    }
  }
  return out;
}

Outcome bounded_space_completeness() {
  const auto machines = all_small_machines();
  const loopguard::SpaceBound bound{3, loopguard::SpacePolicy::TreatAsStuck};
  long halts = 0, loops = 0, exhausted = 0, mismatches = 0, over_budget = 0;
  std::uint64_t max_budget = 0;
  for (const auto& m : machines) {
    max_budget = std::max(max_budget, loopguard::space_bounded_budget(m, bound.cells));
    for (const char* input : {"", "1"}) {
      loopguard::SpaceVerdict v;
      try {
        v = loopguard::decide_space_bounded(m, input, bound);
      } catch (const std::logic_error&) {
        ++exhausted;
        continue;
      }
      const oracle::NaiveMachine naive(m.describe());
      const auto [expected, at] = oracle::decide_window(
          naive, oracle::naive_start(naive, split_input(m, input)), static_cast<long>(bound.cells));
      if (const auto* h = std::get_if<loopguard::Halts>(&v)) {
        ++halts;
        const bool stuck_expected = expected != oracle::WindowVerdict::Halts;
        if (expected == oracle::WindowVerdict::Loops || h->stuck != stuck_expected ||
            h->steps != at) {
          ++mismatches;
        }
        if (h->steps > 49) ++over_budget;
      } else if (const auto* l = std::get_if<loopguard::Loops>(&v)) {
        ++loops;
        if (expected != oracle::WindowVerdict::Loops || l->repeat != at) ++mismatches;
        if (l->repeat > 49) ++over_budget;
      } else {
        ++mismatches;  // TreatAsStuck never reports ExceedsSpace
      }
    }
  }
  std::ostringstream d;
  d << machines.size() << " machines x 2 inputs: " << halts << " halts, " << loops << " loops, "
    << exhausted << " budget exhaustions, " << mismatches << " oracle mismatches, " << over_budget
    << " beyond 49 steps; largest budget " << max_budget;
  return {exhausted == 0 && mismatches == 0 && over_budget == 0 && max_budget == 49 &&
              machines.size() == 13 * 13 * 13 * 13 + 9 * 9,
          d.str()};
}

// ---------------------------------------------------------------------------

Outcome non_repetition_witness() {
  const auto m = machine::parse_machine(read_file(source_path("data/machines/right_runner.tm")));
  std::ostringstream d;
  bool ok = true;
  const char* sep = "";
  for (std::uint64_t budget : {1'000ull, 10'000ull, 100'000ull}) {
    const auto outcome = loopguard::guarded_run(m, "", budget, 1'000'000);
    const auto* b = std::get_if<loopguard::BudgetExhausted>(&outcome);
    const bool exact = b && b->steps == budget;
    ok = ok && exact;
    d << sep << budget << ": " << loopguard::verdict_name(outcome)
      << (exact ? "" : " (unexpected)");
    sep = "; ";
  }
  return {ok, d.str()};
}

// ---------------------------------------------------------------------------

Outcome mu_oracle_equivalence() {
  const auto& lib = rec::standard_library();
  long checked = 0, mismatches = 0;
  auto check2 = [&](const char* name, auto native) {
    const auto& term = *lib.find(name);
    for (std::uint64_t x = 0; x <= 12; ++x) {
      for (std::uint64_t y = 0; y <= 12; ++y) {
        const std::vector<Natural> args{x, y};
        const Natural got = rec::eval_total(term, args);
        const std::uint64_t want = native(x, y);
        ++checked;
        if (got != want || oracle::naive_eval(term, {x, y}) != want) ++mismatches;
      }
    }
  };
  auto check1 = [&](const char* name, auto native) {
    const auto& term = *lib.find(name);
    for (std::uint64_t x = 0; x <= 12; ++x) {
      const std::vector<Natural> args{x};
      ++checked;
      if (rec::eval_total(term, args) != native(x) || oracle::naive_eval(term, {x}) != native(x)) {
        ++mismatches;
      }
    }
  };
  check2("add", oracle::native_add);
  check2("mul", oracle::native_mul);
  check2("sub", oracle::native_sub);
  check1("pred", oracle::native_pred);
  check1("sg", oracle::native_sg);

  const auto mu_sub = rec::parse_rec("(mu sub)");
  long bad_traces = 0;
  for (std::uint64_t x = 0; x <= 12; ++x) {
    const std::vector<Natural> args{x};
    const auto outcome = rec::eval_mu(mu_sub, args, 1'000'000);
    const auto* t = std::get_if<rec::MuTrace>(&outcome);
    bool ok = t && t->result == x && t->witnesses.size() == x + 1;
    for (std::uint64_t y = 0; ok && y <= x; ++y) {
      const auto& [wy, wv] = t->witnesses[y];
      ok = wy == y && wv == oracle::native_sub(x, y) && ((wv == 0) == (y == x));
    }
    if (!ok) ++bad_traces;
  }
  std::ostringstream d;
  d << checked << " library evaluations, " << mismatches << " mismatches; Mu(sub) x=0..12: "
    << bad_traces << " bad traces";
  return {mismatches == 0 && bad_traces == 0, d.str()};
}

// ---------------------------------------------------------------------------

Outcome resumable_equivalence() {
  const std::vector<std::string> pool{
      "add", "mul", "sub", "pred", "sg", "(mu sub)",
      "(comp add (proj 1 2) (comp mul (proj 2 2) (proj 2 2)))",
      "(mu (comp sub (proj 1 2) (comp mul (proj 2 2) (proj 2 2))))",
      "(comp sg (comp sub (proj 2 3) (proj 3 3)))",
      "(primrec (proj 1 1) (comp mul (proj 1 3) (comp (succ) (proj 3 3))))",
      "(comp (mu sub) (comp add (proj 1 2) (proj 2 2)))",
  };
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<std::uint64_t> arg(0, 6);
  std::uniform_int_distribution<std::uint64_t> slice(1, 40);
  long mismatches = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto term = rec::parse_rec(pool[pick(rng)]);
    std::vector<Natural> args;
    for (std::size_t i = 0; i < term.arity(); ++i) args.push_back(arg(rng));
    Natural expected;
    if (!term.contains_mu()) {
      expected = rec::eval_total(term, args);
    } else if (term.kind() == rec::Kind::Mu) {
      expected = std::get<rec::MuTrace>(rec::eval_mu(term, args, 10'000'000)).result;
    } else {
      std::vector<std::uint64_t> small;
      for (const auto& a : args) small.push_back(static_cast<std::uint64_t>(a));
      expected = oracle::naive_eval(term, small);
    }
    rec::Evaluation e(term, args);
    std::optional<Natural> got;
    while (!got) got = e.advance(slice(rng));
    if (*got != expected) ++mismatches;
  }
  return {mismatches == 0, "100 randomized schedules, " + std::to_string(mismatches) + " mismatches"};
}

// ---------------------------------------------------------------------------

Outcome godel_codec() {
  const auto formulas = oracle::small_formulas(4);
  std::set<Natural> codes;
  long round_trip_failures = 0, oracle_disagreements = 0;
  for (const auto& f : formulas) {
    const Natural code = arith::encode_formula(f);
    codes.insert(code);
    if (code != oracle::code_of(f)) ++oracle_disagreements;
    const auto back = arith::decode_formula(code);
    const auto* g = std::get_if<arith::Formula>(&back);
    if (!g || !(*g == f)) ++round_trip_failures;
  }
  const long collisions = static_cast<long>(formulas.size() - codes.size());
  std::ostringstream d;
  d << formulas.size() << " formulas of depth <= 4, " << round_trip_failures
    << " round-trip failures, " << collisions << " collisions, " << oracle_disagreements
    << " disagreements with the independent coder";
  return {formulas.size() == 16083 && round_trip_failures == 0 && collisions == 0 &&
              oracle_disagreements == 0,
          d.str()};
}

// ---------------------------------------------------------------------------

struct CuratedProof {
  const char* name;
  const char* text;
};

const CuratedProof kValidProofs[] = {
    {"A1 instance", "((imp (= 0 0) (imp (= 0 0) (= 0 0))) (axiom A1))"},
    {"A2 instance",
     "((imp (imp (= 0 0) (imp (= (var 1) (var 1)) (= 0 (s 0))))"
     "      (imp (imp (= 0 0) (= (var 1) (var 1))) (imp (= 0 0) (= 0 (s 0))))) (axiom A2))"},
    {"A3 instance",
     "((imp (imp (not (= (var 2) 0)) (not (= 0 0)))"
     "      (imp (imp (not (= (var 2) 0)) (= 0 0)) (= (var 2) 0))) (axiom A3))"},
    {"S3 axiom", "((not (= 0 (s (var 1)))) (axiom S3))"},
    {"identity by MP chain",
     "((imp (imp (= 0 0) (imp (imp (= 0 0) (= 0 0)) (= 0 0))) (imp (imp (= 0 0) (imp (= 0 0) (= 0 0))) (imp (= 0 0) (= 0 0)))) (axiom A2))\n"
     "((imp (= 0 0) (imp (imp (= 0 0) (= 0 0)) (= 0 0))) (axiom A1))\n"
     "((imp (imp (= 0 0) (imp (= 0 0) (= 0 0))) (imp (= 0 0) (= 0 0))) (mp 2 1))\n"
     "((imp (= 0 0) (imp (= 0 0) (= 0 0))) (axiom A1))\n"
     "((imp (= 0 0) (= 0 0)) (mp 4 3))"},
    {"S5 and Gen",
     "((= (+ (var 1) 0) (var 1)) (axiom S5))\n"
     "((all 1 (= (+ (var 1) 0) (var 1))) (gen 1 1))"},
    {"S3, Gen, A4 and MP",
     "((not (= 0 (s (var 1)))) (axiom S3))\n"
     "((all 1 (not (= 0 (s (var 1))))) (gen 1 1))\n"
     "((imp (all 1 (not (= 0 (s (var 1))))) (not (= 0 (s 0)))) (axiom A4))\n"
     "((not (= 0 (s 0))) (mp 2 3))"},
    {"A5 chain",
     "((= (+ (var 1) 0) (var 1)) (axiom S5))\n"
     "((imp (= (+ (var 1) 0) (var 1)) (imp (= 0 0) (= (+ (var 1) 0) (var 1)))) (axiom A1))\n"
     "((imp (= 0 0) (= (+ (var 1) 0) (var 1))) (mp 1 2))\n"
     "((all 1 (imp (= 0 0) (= (+ (var 1) 0) (var 1)))) (gen 3 1))\n"
     "((imp (all 1 (imp (= 0 0) (= (+ (var 1) 0) (var 1)))) (imp (= 0 0) (all 1 (= (+ (var 1) 0) (var 1))))) (axiom A5))\n"
     "((imp (= 0 0) (all 1 (= (+ (var 1) 0) (var 1)))) (mp 4 5))"},
    {"S9 instance",
     "((imp (= (+ (var 1) 0) (+ 0 (var 1)))"
     "      (imp (all 2 (imp (= (+ (var 1) (var 2)) (+ (var 2) (var 1)))"
     "                       (= (+ (var 1) (s (var 2))) (+ (s (var 2)) (var 1)))))"
     "           (all 2 (= (+ (var 1) (var 2)) (+ (var 2) (var 1)))))) (axiom S9))"},
    {"A4 with a free term",
     "((imp (all 1 (all 2 (= (var 1) (var 2)))) (all 2 (= (s (var 3)) (var 2)))) (axiom A4))"},
};

const CuratedProof kInvalidProofs[] = {
    {"forward reference",
     "((imp (= 0 0) (= 0 0)) (mp 2 3))\n"
     "((= 0 0) (axiom S5))\n"
     "((imp (= 0 0) (imp (= 0 0) (= 0 0))) (axiom A1))"},
    {"wrong schema", "((imp (= 0 0) (imp (= 0 0) (= 0 0))) (axiom A2))"},
    {"mismatched A1", "((imp (= 0 0) (imp (= 0 0) (= (var 1) 0))) (axiom A1))"},
    {"A4 capture",
     "((imp (all 1 (all 2 (= (var 1) (var 2)))) (all 2 (= (var 2) (var 2)))) (axiom A4))"},
    {"A5 with the variable free",
     "((imp (all 1 (imp (= (var 1) 0) (= (var 1) 0))) (imp (= (var 1) 0) (all 1 (= (var 1) 0)))) (axiom A5))"},
    {"MP mismatch",
     "((= (+ (var 1) 0) (var 1)) (axiom S5))\n"
     "((imp (= 0 0) (imp (= 0 0) (= 0 0))) (axiom A1))\n"
     "((imp (= 0 0) (= 0 0)) (mp 1 2))"},
    {"Gen from a missing line",
     "((= (+ (var 1) 0) (var 1)) (axiom S5))\n"
     "((all 1 (= (+ (var 1) 0) (var 1))) (gen 7 1))"},
    {"S3 on the wrong variable", "((not (= 0 (s (var 2)))) (axiom S3))"},
    {"induction with the wrong base",
     "((imp (= (+ (var 1) (s 0)) (+ (s 0) (var 1)))"
     "      (imp (all 2 (imp (= (+ (var 1) (var 2)) (+ (var 2) (var 1)))"
     "                       (= (+ (var 1) (s (var 2))) (+ (s (var 2)) (var 1)))))"
     "           (all 2 (= (+ (var 1) (var 2)) (+ (var 2) (var 1)))))) (axiom S9))"},
    {"self-referential MP",
     "((= 0 0) (mp 1 1))"},
};

Outcome xby_correctness() {
  const auto sys = arith::AxiomSystem::first_order_arithmetic();
  long wrong = 0, prefixes = 0;
  std::string first_wrong;
  auto note = [&](const std::string& what) {
    ++wrong;
    if (first_wrong.empty()) first_wrong = what;
  };
  for (const auto& c : kValidProofs) {
    const auto p = arith::parse_proof(c.text);
    if (!arith::codes_proof_of(arith::encode_proof(p), arith::encode_formula(p.back().formula),
                               sys)) {
      note(std::string("valid rejected: ") + c.name);
    }
    for (std::size_t n = 1; n <= p.size(); ++n) {
      arith::ProofSequence prefix(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(n));
      ++prefixes;
      if (!arith::codes_proof_of(arith::encode_proof(prefix),
                                 arith::encode_formula(prefix.back().formula), sys)) {
        note(std::string("prefix rejected: ") + c.name + " at " + std::to_string(n));
      }
    }
    // The same code against a different formula must fail.
    if (arith::codes_proof_of(arith::encode_proof(p),
                              arith::encode_formula(arith::parse_formula("(= 0 (s 0))")), sys)) {
      note(std::string("wrong target accepted: ") + c.name);
    }
  }
  for (const auto& c : kInvalidProofs) {
    const auto p = arith::parse_proof(c.text);
    if (arith::codes_proof_of(arith::encode_proof(p), arith::encode_formula(p.back().formula),
                              sys)) {
      note(std::string("invalid accepted: ") + c.name);
    }
  }
  std::ostringstream d;
  d << std::size(kValidProofs) << " valid, " << std::size(kInvalidProofs) << " invalid, "
    << prefixes << " prefixes, " << wrong << " misclassifications";
  if (!first_wrong.empty()) d << " (" << first_wrong << ")";
  return {wrong == 0, d.str()};
}

// ---------------------------------------------------------------------------

std::string run_extra_races(std::uint64_t& worst) {
  std::ostringstream all;
  const auto ping = machine::parse_machine(read_file(source_path("data/machines/right_runner.tm")));
  for (std::uint64_t slice : {1, 7, 64}) {
    dovetail::MachineProcess tm("runner", ping, machine::initial_configuration(ping, ""), 5000,
                                100'000);
    dovetail::EvaluationProcess ev("mu", rec::parse_rec("(mu sub)"), {Natural(40)}, 100'000);
    dovetail::ProofSearchProcess ps("proof", arith::parse_formula("(= 0 (s 0))"),
                                    arith::AxiomSystem::first_order_arithmetic(),
                                    arith::Enumeration::Literal, 300);
    dovetail::Process* procs[] = {&tm, &ev, &ps};
    const auto r = dovetail::race(procs, slice, 100'000);
    worst = std::max(worst, dovetail::fairness_audit(r.trace));
    all << dovetail::format_trace(r.trace) << dovetail::format_outcome(r.outcome, r.trace) << '\n';
  }
  return all.str();
}

std::string run_suite(std::uint64_t& worst, std::vector<harness::RunRecord>* keep) {
  std::vector<harness::RunRecord> records;
  std::string traces;
  for (auto& inst : harness::curated_suite()) {
    auto run = harness::run_theorem_one(inst);
    worst = std::max(worst, dovetail::fairness_audit(run.trace));
    traces += dovetail::format_trace(run.trace);
    records.push_back({std::move(inst), std::move(run)});
  }
  std::string out = harness::emit_report(records, harness::ReportFormat::Table) +
                    harness::emit_report(records, harness::ReportFormat::Records) + traces;
  if (keep) *keep = std::move(records);
  return out;
}

std::vector<harness::RunRecord> suite_records;

Outcome race_fairness_and_determinism() {
  std::uint64_t worst = 0;
  const std::string first = run_suite(worst, &suite_records) + run_extra_races(worst);
  const std::string second = run_suite(worst, nullptr) + run_extra_races(worst);
  std::ostringstream d;
  d << "max disparity " << worst << ", repeat " << (first == second ? "identical" : "differs")
    << " (" << first.size() << " bytes)";
  return {worst <= 1 && first == second, d.str()};
}

// ---------------------------------------------------------------------------

Outcome theorem_one_suite() {
  if (suite_records.empty()) {
    std::uint64_t ignored = 0;
    run_suite(ignored, &suite_records);
  }
  std::ostringstream d;
  bool ok = true;
  for (const auto& r : suite_records) {
    const auto& v = r.run.verdict;
    const std::string& n = r.instance.name;
    std::string want;
    if (n == "sub-a3" || n == "sub-a5" || n == "isqrt-a10" || n == "monus-tm-a4") {
      want = "ZeroFound";
    } else if (n == "axiom-a1" || n == "axiom-a4" || n == "induction-s9") {
      want = "ProofFound";
    } else if (n == "rigged-tm-a1") {
      want = "SelfTerminationDetected";
    } else {
      want = "Undetermined";
    }
    bool confirmed = true;
    if (const auto* z = std::get_if<harness::ZeroFound>(&v)) {
      confirmed = harness::confirm_zero(r.instance, z->y);
    } else if (const auto* p = std::get_if<harness::ProofFound>(&v)) {
      confirmed = harness::confirm_proof(r.instance, p->x);
    } else if (const auto* s = std::get_if<harness::SelfTerminationDetected>(&v)) {
      confirmed = harness::confirm_self_termination(r.instance, *s);
    }
    if (harness::verdict_name(v) != want || !confirmed) {
      ok = false;
      d << n << " gave " << harness::verdict_name(v) << (confirmed ? "" : " (unconfirmed)")
        << "; ";
    }
  }
  const std::string table = harness::emit_report(suite_records, harness::ReportFormat::Table);
  const std::string records = harness::emit_report(suite_records, harness::ReportFormat::Records);
  const bool table_match = table == read_file(source_path("tests/golden/suite_table.txt"));
  const bool records_match = records == read_file(source_path("tests/golden/suite_records.jsonl"));
  d << suite_records.size() << " instances; golden table " << (table_match ? "matches" : "differs")
    << ", golden records " << (records_match ? "match" : "differ");
  return {ok && table_match && records_match, d.str()};
}

}  // namespace

int main() {
  report("loop-detector soundness", loop_detector_soundness);
  report("bounded-space completeness", bounded_space_completeness);
  report("non-repetition witness", non_repetition_witness);
  report("mu-oracle equivalence", mu_oracle_equivalence);
  report("resumable-evaluator equivalence", resumable_equivalence);
  report("godel codec", godel_codec);
  report("xBy correctness", xby_correctness);
  report("race fairness and determinism", race_fairness_and_determinism);
  report("theorem 1 suite", theorem_one_suite);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
