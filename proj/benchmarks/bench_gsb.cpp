#include <benchmark/benchmark.h>

#include "gsb/completion.hpp"
#include "gsb/growth.hpp"
#include "gsb/text.hpp"

namespace {

const char* kSystem = R"(gsbsys 1
alphabet a b c
order deglex a < b < c
rule a a -> 1
rule b b -> 1
rule c c -> 1
rule b c a -> a c b
rule c a b -> b a c
rule c b a -> a b c
schema b (a c)^m b -> (c a)^m for m >= 1
)";

const gsb::RewriteSystem& system() {
  static gsb::RewriteSystem sys = gsb::parse_system(kSystem);
  return sys;
}

void BM_NormalForm(benchmark::State& state) {
  const gsb::RewriteSystem& sys = system();
  gsb::Word u = gsb::word_from_names(*sys.alphabet(), "cbacbacbacbabacacbab");
  for (auto _ : state) {
    benchmark::DoNotOptimize(gsb::normal_form(u, sys));
  }
}
BENCHMARK(BM_NormalForm);

void BM_CountNormalWords(benchmark::State& state) {
  const gsb::RewriteSystem& sys = system();
  gsb::IrrAutomaton aut =
      gsb::build_irr_automaton(gsb::ForbiddenSet::of(sys), sys.alphabet());
  for (auto _ : state) {
    benchmark::DoNotOptimize(gsb::count_normal_words(aut, state.range(0)));
  }
}
BENCHMARK(BM_CountNormalWords)->Arg(50)->Arg(200);

void BM_Verify(benchmark::State& state) {
  const gsb::RewriteSystem& sys = system();
  for (auto _ : state) {
    benchmark::DoNotOptimize(gsb::verify_gsb(sys, state.range(0)));
  }
}
BENCHMARK(BM_Verify)->Arg(3)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
