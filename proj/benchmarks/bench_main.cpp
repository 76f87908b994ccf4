#include <benchmark/benchmark.h>

#include "canon/completion.hpp"
#include "canon/eq_backend.hpp"
#include "canon/ground_completion.hpp"

using namespace canon;

namespace {

EqBackend make_backend(const char* preset_name, int ts, int d) {
  return EqBackend(Signature::tally(), preset(preset_name), Bounds{ts, d});
}

Pres even_pres(EqBackend& b) {
  return {b.formulas().equation(b.terms().numeral(4), b.terms().numeral(2)),
          b.formulas().equation(b.terms().numeral(4), b.terms().numeral(0))};
}

void SharpCompletion(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    EqBackend b = make_backend("completion", n, n);
    Pres sh = sharp(b, even_pres(b));
    benchmark::DoNotOptimize(sh);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(SharpCompletion)->DenseRange(5, 9)->Complexity();

void SharpCongruenceClosure(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    EqBackend b = make_backend("congruence_closure", n, n);
    Pres sh = sharp(b, even_pres(b));
    benchmark::DoNotOptimize(sh);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(SharpCongruenceClosure)->DenseRange(5, 9)->Complexity();

void ProofComparison(benchmark::State& state) {
  EqBackend b = make_backend("completion", 6, 3);
  Pres a = even_pres(b);
  auto proofs = enumerate_proofs(b.proofs(), a, b.bounds());
  for (auto _ : state) {
    // fresh ordering each round so the memo starts cold
    ProofOrdering ord(preset("completion"), b.proofs());
    size_t acc = 0;
    for (ProofId p : proofs) {
      for (ProofId q : proofs) acc += static_cast<size_t>(ord.rpo(p, q));
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(ProofComparison);

void MembershipOracle(benchmark::State& state) {
  EqBackend b = make_backend("completion", 8, 8);
  Pres a = even_pres(b);
  auto universe = universe_formulas(b.formulas(), 8);
  for (auto _ : state) {
    size_t members = 0;
    for (FormulaId f : universe) {
      members += decide_membership(b.formulas(), a, f);
    }
    benchmark::DoNotOptimize(members);
  }
}
BENCHMARK(MembershipOracle);

void GroundCompletionRun(benchmark::State& state) {
  EqBackend b = make_backend("ground_completion_total", 9, 9);
  auto& fp = b.formulas();
  Pres big;
  for (int i = 1; i <= static_cast<int>(state.range(0)); ++i) {
    big.insert(fp.equation(b.terms().numeral(i + 1), b.terms().numeral(i - 1)));
  }
  for (auto _ : state) {
    Trace t = ground_completion(fp, big, b.ordering().config().term_order);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(GroundCompletionRun)->DenseRange(2, 6);

void MassCompletionEven(benchmark::State& state) {
  for (auto _ : state) {
    EqBackend b = make_backend("completion", 7, 7);
    Trace t = run_completion(b, even_pres(b), Mechanism::Mass);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(MassCompletionEven);

}  // namespace

BENCHMARK_MAIN();
