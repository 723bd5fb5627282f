#include <benchmark/benchmark.h>

#include "ccsf/behaviour.hpp"
#include "ccsf/bisim.hpp"
#include "ccsf/eqlogic.hpp"
#include "ccsf/lts.hpp"
#include "ccsf/opspace.hpp"
#include "ccsf/parser.hpp"
#include "ccsf/trees.hpp"
#include "ccsf/witness.hpp"

using namespace ccsf;

namespace {

RuleSet all_left() { return make_rule_set({"a", "a'", "tau"}, {}, {"a/a'"}); }

void BM_enumerate_admissible(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_admissible());
}
BENCHMARK(BM_enumerate_admissible);

void BM_build_lts_witness(benchmark::State& state) {
  RuleSet rs = all_left();
  OperatorClass oc = dispatch(rs);
  WitnessFamily wf = witness_terms(oc, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_lts(rs, wf.en.rhs));
}
BENCHMARK(BM_build_lts_witness)->Arg(3)->Arg(5)->Arg(8);

void BM_bisim_witness_equation(benchmark::State& state) {
  RuleSet rs = all_left();
  OperatorClass oc = dispatch(rs);
  WitnessFamily wf = witness_terms(oc, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(bisim(rs, wf.en.lhs, wf.en.rhs).equivalent);
}
BENCHMARK(BM_bisim_witness_equation)->Arg(3)->Arg(5)->Arg(8);

void BM_sound_parallel_law(benchmark::State& state) {
  RuleSet rs = all_left();
  Equation law{parse_term("x || y"), parse_term("f(x, y) + f(y, x)")};
  SyncTreeEnumerator en{3, 3, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(sound(rs, law, en).refuted);
}
BENCHMARK(BM_sound_parallel_law)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_tree_enumeration(benchmark::State& state) {
  SyncTreeEnumerator en{3, 3, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(en.all().size());
}
BENCHMARK(BM_tree_enumeration)->Arg(4)->Arg(6);

void BM_behaviour_intern(benchmark::State& state) {
  RuleSet rs = all_left();
  TermPtr p = parse_term("f(a.0, a'.0 + a'.a.0) || (a.0 + tau.a'.0)");
  for (auto _ : state) {
    BehCtx ctx(rs);
    benchmark::DoNotOptimize(ctx.id(p));
  }
}
BENCHMARK(BM_behaviour_intern);

}  // namespace

BENCHMARK_MAIN();
