#include <benchmark/benchmark.h>

#include "pipelat/coxeter.hpp"
#include "pipelat/pdlattice.hpp"
#include "pipelat/pipedream.hpp"
#include "pipelat/subword.hpp"

using namespace pipelat;

static void BM_EnumerateReversing(benchmark::State& state) {
  const Permutation w = rho(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(w, false).size());
}
BENCHMARK(BM_EnumerateReversing)->DenseRange(3, 6);

static void BM_EnumerateAcyclic(benchmark::State& state) {
  const Permutation w = parse_permutation("1365724");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(w, true).size());
}
BENCHMARK(BM_EnumerateAcyclic);

static void BM_InsertAllOfInterval(benchmark::State& state) {
  const Permutation w = Permutation::reversing(static_cast<int>(state.range(0)));
  const WeakInterval iv = weak_interval(w);
  for (auto _ : state)
    for (const Permutation& pi : iv.elements) benchmark::DoNotOptimize(insert(pi, w));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(iv.elements.size()));
}
BENCHMARK(BM_InsertAllOfInterval)->DenseRange(4, 6);

static void BM_SweepAllOfInterval(benchmark::State& state) {
  const Permutation w = Permutation::reversing(static_cast<int>(state.range(0)));
  const WeakInterval iv = weak_interval(w);
  for (auto _ : state)
    for (const Permutation& pi : iv.elements) benchmark::DoNotOptimize(sweep(pi, w));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(iv.elements.size()));
}
BENCHMARK(BM_SweepAllOfInterval)->DenseRange(4, 6);

static void BM_TheoremA(benchmark::State& state) {
  const Permutation w = parse_permutation("126543");
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem_A(w).pass());
}
BENCHMARK(BM_TheoremA);

static void BM_GroupEnumeration(benchmark::State& state) {
  const char* tags[] = {"A3", "B3", "H3", "D4", "A5"};
  const auto sys = CoxeterSystem::build(tags[state.range(0)]);
  state.SetLabel(tags[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(CoxeterGroup(sys).size());
}
BENCHMARK(BM_GroupEnumeration)->DenseRange(0, 4);

static void BM_SubwordFacets(benchmark::State& state) {
  const auto g = std::make_shared<const CoxeterGroup>(CoxeterSystem::build("A4"));
  CoxWord q;
  for (int k = 0; k < 4; ++k)
    for (int s : {2, 4, 1, 3}) q.push_back(s);
  const SubwordComplex sc(g, q, g->longest());
  for (auto _ : state) benchmark::DoNotOptimize(sc.facets().size());
}
BENCHMARK(BM_SubwordFacets);

static void BM_ConjectureCheck(benchmark::State& state) {
  const auto g = std::make_shared<const CoxeterGroup>(CoxeterSystem::build("B3"));
  const SubwordComplex sc(g, {1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3}, g->longest());
  for (auto _ : state) benchmark::DoNotOptimize(check_conjectures(sc).conj_a);
}
BENCHMARK(BM_ConjectureCheck);

static void BM_ScanB3(benchmark::State& state) {
  const auto g = std::make_shared<const CoxeterGroup>(CoxeterSystem::build("B3"));
  ScanOptions opts;
  opts.jobs = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(scan_conjectures(g, opts, [](const std::string&, const ConjectureResult&) {}).pairs);
}
BENCHMARK(BM_ScanB3)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
