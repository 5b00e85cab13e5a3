// workbench: command-line front end for the machine, recursive-function,
// proof and race engines and the zero-search / proof-search experiment.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cwb/dovetail.hpp"
#include "cwb/errors.hpp"
#include "cwb/formula.hpp"
#include "cwb/godel.hpp"
#include "cwb/loop_guard.hpp"
#include "cwb/machine.hpp"
#include "cwb/processes.hpp"
#include "cwb/proof.hpp"
#include "cwb/proof_search.hpp"
#include "cwb/recfun.hpp"
#include "cwb/report.hpp"
#include "cwb/theorem_one.hpp"

namespace {

using namespace cwb;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// "@path" reads the text from a file.
std::string text_arg(const std::string& arg) {
  return !arg.empty() && arg[0] == '@' ? read_file(arg.substr(1)) : arg;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + out_path);
  out << text;
}

std::vector<Natural> parse_args(const std::vector<std::string>& words) {
  std::vector<Natural> args;
  for (const auto& w : words) {
    std::stringstream ss(w);
    for (std::string part; std::getline(ss, part, ',');) {
      if (!part.empty()) args.push_back(parse_natural(part));
    }
  }
  return args;
}

rec::Library library_with(const std::string& lib_path) {
  if (lib_path.empty()) return rec::standard_library();
  return rec::parse_library(read_file(lib_path), rec::standard_library());
}

std::string format_space(const loopguard::SpaceVerdict& v) {
  std::ostringstream out;
  out << loopguard::verdict_name(v);
  if (const auto* h = std::get_if<loopguard::Halts>(&v)) {
    out << " steps=" << h->steps << (h->stuck ? " stuck" : "");
  } else if (const auto* l = std::get_if<loopguard::Loops>(&v)) {
    out << " first=" << l->first << " repeat=" << l->repeat;
  } else {
    out << " step=" << std::get<loopguard::ExceedsSpace>(v).step;
  }
  return out.str();
}

std::string format_guarded(const machine::MachineSpec& m, const loopguard::GuardedOutcome& o) {
  std::ostringstream out;
  out << loopguard::verdict_name(o);
  if (const auto* h = std::get_if<loopguard::Halted>(&o)) {
    out << " steps=" << h->steps << "\ntape: " << machine::describe(m, h->final);
  } else if (const auto* s = std::get_if<loopguard::Stuck>(&o)) {
    out << " steps=" << s->steps << "\ntape: " << machine::describe(m, s->at);
  } else if (const auto* t = std::get_if<loopguard::SelfTermination>(&o)) {
    out << " first=" << t->first_occurrence_step << " repeat=" << t->repeat_step;
  } else if (const auto* b = std::get_if<loopguard::BudgetExhausted>(&o)) {
    out << " steps=" << b->steps;
  } else {
    out << " ids=" << std::get<loopguard::MemoryExhausted>(o).ids_recorded;
  }
  return out.str();
}

std::unique_ptr<dovetail::Process> make_process(const std::string& spec, std::size_t index,
                                                std::uint64_t budget, std::uint64_t memory_cap,
                                                arith::Enumeration mode) {
  const std::string name = "P" + std::to_string(index + 1);
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ValidationError("process spec needs kind:...: " + spec);
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  if (kind == "tm") {
    const auto last = rest.rfind(':');
    if (last == std::string::npos) throw ValidationError("expected tm:<file>:<input>");
    auto m = machine::parse_machine(read_file(rest.substr(0, last)));
    auto start = machine::initial_configuration(m, rest.substr(last + 1));
    return std::make_unique<dovetail::MachineProcess>(name, std::move(m), std::move(start), budget,
                                                      memory_cap);
  }
  if (kind == "rec") {
    const auto last = rest.rfind(':');
    if (last == std::string::npos) throw ValidationError("expected rec:<term>:<args>");
    auto term = rec::parse_rec(rest.substr(0, last));
    return std::make_unique<dovetail::EvaluationProcess>(name, std::move(term),
                                                         parse_args({rest.substr(last + 1)}), budget);
  }
  if (kind == "proof") {
    return std::make_unique<dovetail::ProofSearchProcess>(
        name, arith::parse_formula(text_arg(rest)), arith::AxiomSystem::first_order_arithmetic(),
        mode, budget);
  }
  throw ValidationError("unknown process kind '" + kind + "'");
}

arith::Enumeration mode_from(const std::string& s) {
  auto mode = arith::enumeration_from_name(s);
  if (!mode) throw ValidationError("mode must be literal or structural");
  return *mode;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computability workbench: machines, recursive functions, proofs and races"};
  app.require_subcommand(1);

  // tm
  auto* tm = app.add_subcommand("tm", "Turing machines")->require_subcommand(1);
  std::string tm_file, tm_input;
  std::uint64_t tm_budget = 1'000'000, tm_memory = 1'000'000, tm_cells = 0;
  std::string tm_policy = "reject";
  auto* tm_run = tm->add_subcommand("run", "Run a machine without loop detection");
  auto* tm_detect = tm->add_subcommand("detect", "Run with loop detection");
  for (auto* sub : {tm_run, tm_detect}) {
    sub->add_option("machine", tm_file, "Machine description file")->required();
    sub->add_option("--input,-i", tm_input, "Input word");
    sub->add_option("--budget-steps", tm_budget, "Step budget");
  }
  tm_detect->add_option("--memory-cap", tm_memory, "Most IDs to record");
  tm_detect->add_option("--space", tm_cells, "Decide with the tape confined to this many cells");
  tm_detect->add_option("--space-policy", tm_policy, "reject or stuck")
      ->check(CLI::IsMember({"reject", "stuck"}));

  // rec
  auto* recc = app.add_subcommand("rec", "Recursive functions")->require_subcommand(1);
  std::string rec_term, rec_lib;
  std::vector<std::string> rec_args;
  std::uint64_t rec_budget = 1'000'000;
  auto* rec_eval = recc->add_subcommand("eval", "Evaluate a mu-free term");
  auto* rec_mu = recc->add_subcommand("mu", "Evaluate a term with minimisation under a budget");
  for (auto* sub : {rec_eval, rec_mu}) {
    sub->add_option("term", rec_term, "Term text or @file")->required();
    sub->add_option("args", rec_args, "Arguments (space or comma separated)");
    sub->add_option("--lib", rec_lib, "Extra (def name term) library file");
  }
  rec_mu->add_option("--budget-steps", rec_budget, "Evaluation budget");

  // godel
  auto* godel = app.add_subcommand("godel", "Goedel numbering")->require_subcommand(1);
  std::string godel_text;
  bool godel_proof = false;
  auto* godel_encode = godel->add_subcommand("encode", "Code of a formula (or a proof file)");
  godel_encode->add_option("text", godel_text, "Formula text or @file")->required();
  godel_encode->add_flag("--proof", godel_proof, "Treat the text as a proof");
  auto* godel_decode = godel->add_subcommand("decode", "Formula (or proof) coded by a number");
  godel_decode->add_option("number", godel_text, "Decimal number")->required();
  godel_decode->add_flag("--proof", godel_proof, "Decode as a proof");

  // proof
  auto* proofc = app.add_subcommand("proof", "Proofs")->require_subcommand(1);
  std::string proof_file, proof_target, proof_mode = "literal", proof_start = "1";
  std::uint64_t proof_budget = 100'000;
  auto* proof_check = proofc->add_subcommand("check", "Check a proof file");
  proof_check->add_option("file", proof_file, "Proof file")->required();
  auto* proof_search = proofc->add_subcommand("search", "Search for a proof of a formula");
  proof_search->add_option("formula", proof_target, "Target formula text or @file")->required();
  proof_search->add_option("--budget-candidates", proof_budget, "Candidates to examine");
  proof_search->add_option("--mode", proof_mode, "literal or structural")
      ->check(CLI::IsMember({"literal", "structural"}));
  proof_search->add_option("--start", proof_start, "First code tried in literal mode");

  // race
  auto* racec = app.add_subcommand("race", "Race processes round-robin");
  std::vector<std::string> race_procs;
  std::uint64_t race_slice = 64, race_ticks = 1'000'000, race_budget = 1'000'000,
                race_memory = 1'000'000;
  std::string race_trace, race_mode = "literal";
  racec->add_option("--proc", race_procs, "tm:<file>:<input> | rec:<term>:<args> | proof:<formula>")
      ->required();
  racec->add_option("--slice", race_slice, "Steps per tick");
  racec->add_option("--budget-ticks", race_ticks, "Scheduler ticks");
  racec->add_option("--budget-steps", race_budget, "Own-step budget of each process");
  racec->add_option("--memory-cap", race_memory, "ID memory of machine processes");
  racec->add_option("--proof-mode", race_mode, "literal or structural")
      ->check(CLI::IsMember({"literal", "structural"}));
  racec->add_option("--trace", race_trace, "Write the tick trace here");

  // theorem1
  auto* thm = app.add_subcommand("theorem1", "Race zero search against proof search");
  harness::TheoremOneInstance inst;
  std::string thm_g, thm_machine, thm_h, thm_a = "0", thm_backend = "rec", thm_mode = "structural";
  std::string out_format = "table", out_path, thm_trace;
  inst.name = "instance";
  thm->add_option("--name", inst.name, "Instance name");
  thm->add_option("--g", thm_g, "G(x, y) as a term");
  thm->add_option("--machine", thm_machine, "Machine computing G (tm backend)");
  thm->add_option("--backend", thm_backend, "rec or tm")->check(CLI::IsMember({"rec", "tm"}));
  thm->add_option("--a", thm_a, "The fixed first argument");
  thm->add_option("--h-formula", thm_h, "H(v1, v2) as a formula")->required();
  thm->add_option("--budget-t1", inst.budgets.t1_steps, "Zero-search steps");
  thm->add_option("--budget-t2", inst.budgets.t2_candidates, "Proof candidates");
  thm->add_option("--budget-ticks", inst.budgets.ticks, "Scheduler ticks");
  thm->add_option("--slice", inst.budgets.slice, "Steps per tick");
  thm->add_option("--memory-cap", inst.budgets.tm_memory_cap, "ID memory per y (tm backend)");
  thm->add_option("--t2-mode", thm_mode, "literal or structural")
      ->check(CLI::IsMember({"literal", "structural"}));
  thm->add_option("--trace", thm_trace, "Write the race trace here");

  // suite
  auto* suite = app.add_subcommand("suite", "Run the curated instance set");

  for (auto* sub : {thm, suite}) {
    sub->add_option("--format", out_format, "table or records")
        ->check(CLI::IsMember({"table", "records"}));
    sub->add_option("--out", out_path, "Write the report here");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (tm->parsed()) {
      const auto m = machine::parse_machine(read_file(tm_file));
      if (tm_run->parsed()) {
        const auto outcome = machine::run(m, tm_input, tm_budget);
        const auto& c = machine::configuration_of(outcome);
        std::cout << machine::outcome_name(outcome) << " steps=" << c.steps << "\ntape: "
                  << machine::describe(m, c) << '\n';
      } else if (tm_cells > 0) {
        loopguard::SpaceBound bound{tm_cells, tm_policy == "reject"
                                                  ? loopguard::SpacePolicy::Reject
                                                  : loopguard::SpacePolicy::TreatAsStuck};
        std::cout << format_space(loopguard::decide_space_bounded(m, tm_input, bound)) << '\n';
      } else {
        std::cout << format_guarded(m, loopguard::guarded_run(m, tm_input, tm_budget, tm_memory))
                  << '\n';
      }
    } else if (recc->parsed()) {
      const auto lib = library_with(rec_lib);
      const auto term = rec::parse_rec(text_arg(rec_term), lib);
      const auto args = parse_args(rec_args);
      if (rec_eval->parsed()) {
        std::cout << to_string(rec::eval_total(term, args)) << '\n';
      } else {
        const auto outcome = rec::eval_mu(term, args, rec_budget);
        if (const auto* t = std::get_if<rec::MuTrace>(&outcome)) {
          std::cout << "y* = " << to_string(t->result) << '\n';
          for (const auto& [y, v] : t->witnesses) {
            std::cout << "  " << to_string(y) << " -> " << to_string(v) << '\n';
          }
        } else {
          const auto& b = std::get<rec::MuBudgetExhausted>(outcome);
          std::cout << "budget exhausted at y = " << to_string(b.frontier) << " after " << b.steps
                    << " steps\n";
        }
      }
    } else if (godel->parsed()) {
      if (godel_encode->parsed()) {
        const std::string text = text_arg(godel_text);
        const Natural n = godel_proof ? arith::encode_proof(arith::parse_proof(text))
                                      : arith::encode_formula(arith::parse_formula(text));
        std::cout << to_string(n) << '\n';
      } else {
        const Natural n = parse_natural(godel_text);
        if (godel_proof) {
          auto p = arith::decode_proof(n);
          if (const auto* f = std::get_if<arith::DecodeFailure>(&p)) {
            std::cout << "not a proof code: position " << f->position << ": " << f->reason << '\n';
          } else {
            std::cout << arith::format_proof(std::get<arith::ProofSequence>(p));
          }
        } else {
          auto f = arith::decode_formula(n);
          if (const auto* e = std::get_if<arith::DecodeFailure>(&f)) {
            std::cout << "not a formula code: position " << e->position << ": " << e->reason
                      << '\n';
          } else {
            const auto& formula = std::get<arith::Formula>(f);
            std::cout << arith::to_sexpr(formula) << "\n" << arith::to_infix(formula) << '\n';
          }
        }
      }
    } else if (proofc->parsed()) {
      const auto sys = arith::AxiomSystem::first_order_arithmetic();
      if (proof_check->parsed()) {
        const auto p = arith::parse_proof(read_file(proof_file));
        const auto r = arith::check_proof(p, sys);
        if (const auto* v = std::get_if<arith::Valid>(&r)) {
          std::cout << "valid: " << arith::to_sexpr(v->conclusion) << "\ncode: "
                    << to_string(arith::encode_proof(p)) << '\n';
        } else {
          const auto& bad = std::get<arith::Invalid>(r);
          std::cout << "invalid at line " << bad.line << ": " << bad.reason << '\n';
        }
      } else {
        const auto target = arith::parse_formula(text_arg(proof_target));
        const auto outcome = arith::proof_search(target, sys, proof_budget, mode_from(proof_mode),
                                                 parse_natural(proof_start));
        if (const auto* f = std::get_if<arith::Found>(&outcome)) {
          std::cout << "found x=" << to_string(f->x) << " after " << f->steps
                    << " candidates\n";
          auto p = arith::decode_proof(f->x);
          std::cout << arith::format_proof(std::get<arith::ProofSequence>(p));
        } else {
          std::cout << "not found within " << proof_budget << " candidates\n";
        }
      }
    } else if (racec->parsed()) {
      std::vector<std::unique_ptr<dovetail::Process>> owned;
      std::vector<dovetail::Process*> procs;
      for (std::size_t i = 0; i < race_procs.size(); ++i) {
        owned.push_back(
            make_process(race_procs[i], i, race_budget, race_memory, mode_from(race_mode)));
        procs.push_back(owned.back().get());
        std::cout << owned.back()->name() << ": " << race_procs[i] << '\n';
      }
      const auto result = dovetail::race(procs, race_slice, race_ticks);
      if (!race_trace.empty()) emit(race_trace, dovetail::format_trace(result.trace));
      std::cout << dovetail::format_outcome(result.outcome, result.trace) << '\n';
    } else if (thm->parsed()) {
      inst.backend = *harness::backend_from_name(thm_backend);
      inst.a = parse_natural(thm_a);
      inst.h = arith::parse_formula(text_arg(thm_h));
      inst.t2_mode = mode_from(thm_mode);
      if (!thm_g.empty()) inst.g = rec::parse_rec(text_arg(thm_g));
      if (!thm_machine.empty()) inst.machine = machine::parse_machine(read_file(thm_machine));
      harness::validate(inst);
      auto run = harness::run_theorem_one(inst);
      if (!thm_trace.empty()) emit(thm_trace, dovetail::format_trace(run.trace));
      std::vector<harness::RunRecord> records{{inst, std::move(run)}};
      emit(out_path,
           harness::emit_report(records, *harness::report_format_from_name(out_format)));
    } else if (suite->parsed()) {
      std::vector<harness::RunRecord> records;
      for (auto& instance : harness::curated_suite()) {
        auto run = harness::run_theorem_one(instance);
        records.push_back({std::move(instance), std::move(run)});
      }
      emit(out_path,
           harness::emit_report(records, *harness::report_format_from_name(out_format)));
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
