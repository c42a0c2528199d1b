#include <benchmark/benchmark.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "statseq/families.hpp"
#include "statseq/graph.hpp"
#include "statseq/hardness.hpp"
#include "statseq/oracle.hpp"
#include "statseq/realize_injective.hpp"
#include "statseq/srt_d3.hpp"

namespace {

using namespace statseq;

// A spider with legs 1..k is status injective from k ~ 45 on; it gives
// realizable injective inputs of arbitrary size.
InjectiveSequence injective_input(int legs) {
  std::vector<int> lengths(legs);
  for (int i = 0; i < legs; ++i) lengths[i] = i + 1;
  Tree t = generate(FamilySpec::spider(lengths));
  auto s = tree_statuses(t);
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::runtime_error("benchmark input is not injective");
  return InjectiveSequence::from_values(s);
}

void BM_RealizeInjective(benchmark::State& state) {
  auto seq = injective_input(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto r = realize_injective(seq);
    if (!r) throw std::runtime_error("expected realizable input");
    benchmark::DoNotOptimize(r->tree.order());
  }
  state.SetComplexityN(seq.size());
}
// legs 45/140/446 give n ~= 1e3 / 1e4 / 1e5
BENCHMARK(BM_RealizeInjective)->Arg(45)->Arg(140)->Arg(446)->Complexity(benchmark::oNLogN);

void BM_StatusSequenceBFS(benchmark::State& state) {
  Tree t = generate(FamilySpec::family_t_star(static_cast<int>(state.range(0)), 3));
  for (auto _ : state) benchmark::DoNotOptimize(status_sequence(t.graph()).size());
}
BENCHMARK(BM_StatusSequenceBFS)->Arg(16)->Arg(64)->Arg(256);

void BM_TreeStatusesLinear(benchmark::State& state) {
  auto seq = injective_input(static_cast<int>(state.range(0)));
  Tree t = realize_injective(seq)->tree;
  for (auto _ : state) benchmark::DoNotOptimize(tree_statuses(t).size());
}
BENCHMARK(BM_TreeStatusesLinear)->Arg(140)->Arg(446);

void BM_EnumerateFreeTrees(benchmark::State& state) {
  for (auto _ : state) {
    long count = 0;
    for_each_free_tree(static_cast<int>(state.range(0)), [&](const Tree&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateFreeTrees)->Arg(10)->Arg(12)->Arg(14);

void BM_CanonicalForm(benchmark::State& state) {
  Tree t = generate(FamilySpec::family_t_double_star(8, 6));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(t).size());
}
BENCHMARK(BM_CanonicalForm);

void BM_SrtD3Gadget(benchmark::State& state) {
  ThreePartitionInstance inst({5, 6, 7, 5, 6, 7});
  auto seq = reduce_3partition(inst);
  for (auto _ : state) {
    auto t = srt_d3_realize(seq, 2);
    if (!t) throw std::runtime_error("expected realizable gadget sequence");
    benchmark::DoNotOptimize(t->order());
  }
}
BENCHMARK(BM_SrtD3Gadget);

}  // namespace

BENCHMARK_MAIN();
