#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "cwb/godel.hpp"
#include "cwb/loop_guard.hpp"
#include "cwb/machine.hpp"
#include "cwb/proof.hpp"
#include "cwb/recfun.hpp"

using namespace cwb;

namespace {

std::string slurp(const std::string& relative) {
  std::ifstream in(std::string(CWB_SOURCE_DIR) + "/" + relative);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void BM_MachineRun(benchmark::State& state) {
  auto m = machine::parse_machine(slurp("data/machines/unary_monus.tm"));
  const std::string input = std::string(state.range(0), '1') + "0" + std::string(3, '1');
  for (auto _ : state) benchmark::DoNotOptimize(machine::run(m, input, 10'000'000));
}
BENCHMARK(BM_MachineRun)->Arg(16)->Arg(64)->Arg(256);

void BM_GuardedRunRightRunner(benchmark::State& state) {
  auto m = machine::parse_machine(slurp("data/machines/right_runner.tm"));
  for (auto _ : state)
    benchmark::DoNotOptimize(loopguard::guarded_run(m, "", state.range(0), 1'000'000));
}
BENCHMARK(BM_GuardedRunRightRunner)->Arg(1'000)->Arg(100'000);

void BM_GuardedRunRiggedLoop(benchmark::State& state) {
  auto m = machine::parse_machine(slurp("data/machines/rigged_loop_at_2.tm"));
  for (auto _ : state) benchmark::DoNotOptimize(loopguard::guarded_run(m, "1011", 1'000'000, 1'000'000));
}
BENCHMARK(BM_GuardedRunRiggedLoop);

void BM_RecEval(benchmark::State& state) {
  auto lib = rec::parse_library(slurp("data/terms/isqrt.rec"), rec::standard_library());
  auto t = rec::parse_rec("isqrt-up", lib);
  std::vector<Natural> args{Natural(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(rec::eval_mu(t, args, 100'000'000));
}
BENCHMARK(BM_RecEval)->Arg(10)->Arg(100);

void BM_GodelRoundTrip(benchmark::State& state) {
  auto f = arith::parse_formula(
      "(imp (= (+ 0 0) 0) (imp (all 1 (imp (= (+ 0 (var 1)) (var 1))"
      " (= (+ 0 (s (var 1))) (s (var 1))))) (all 1 (= (+ 0 (var 1)) (var 1)))))");
  for (auto _ : state) benchmark::DoNotOptimize(arith::decode_formula(arith::encode_formula(f)));
}
BENCHMARK(BM_GodelRoundTrip);

void BM_ProofCheck(benchmark::State& state) {
  auto p = arith::parse_proof(slurp("data/proofs/identity.proof"));
  auto sys = arith::AxiomSystem::first_order_arithmetic();
  for (auto _ : state) benchmark::DoNotOptimize(arith::check_proof(p, sys));
}
BENCHMARK(BM_ProofCheck);

void BM_XBy(benchmark::State& state) {
  auto p = arith::parse_proof(slurp("data/proofs/identity.proof"));
  auto sys = arith::AxiomSystem::first_order_arithmetic();
  const Natural x = arith::encode_proof(p);
  const Natural y = arith::encode_formula(p.back().formula);
  for (auto _ : state) benchmark::DoNotOptimize(arith::codes_proof_of(x, y, sys));
}
BENCHMARK(BM_XBy);

}  // namespace

BENCHMARK_MAIN();
