// Serial vs OpenMP sweep of one operator over a span of words.
// Threads follow OMP_NUM_THREADS; on a single core the two paths tie.

#include "fockarith/sweep.hpp"
#include "fockarith/verification.hpp"

#include <benchmark/benchmark.h>

using namespace fockarith;

namespace {

std::vector<BasisWord> span_words(Flavor f, int base, int len) {
  std::vector<BasisWord> out;
  for (const auto& n : verify::canonical_span(f, base, len)) out.push_back(encode(n));
  return out;
}

template <bool Parallel>
void BM_SuccessorSweep(benchmark::State& state) {
  const int len = static_cast<int>(state.range(0));
  const MachineSpec spec{3, Statistics::Fermion, {}};
  const auto words = span_words(Flavor::Int, 3, len);
  const Op op = Op::power(successor_op(Flavor::Int, 1), 3);
  for (auto _ : state) benchmark::DoNotOptimize(sweep(spec, op, words, Parallel));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * words.size()));
  state.counters["threads"] = sweep_threads();
}

template <bool Parallel>
void BM_TimesSweep(benchmark::State& state) {
  const int len = static_cast<int>(state.range(0));
  const MachineSpec spec{2, Statistics::Boson, {}};
  const auto span = verify::canonical_span(Flavor::Nat, 2, len);
  const Numeral zero = numeral_from_int(0, Flavor::Nat, 2);
  std::vector<BasisWord> words;
  for (const auto& s : span)
    for (const auto& t : span) words.push_back(triple_word(s, t, zero));
  const Op op = times_op(Flavor::Nat);
  for (auto _ : state) benchmark::DoNotOptimize(sweep(spec, op, words, Parallel));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * words.size()));
  state.counters["threads"] = sweep_threads();
}

}  // namespace

BENCHMARK(BM_SuccessorSweep<false>)->Name("successor_sweep/serial")->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuccessorSweep<true>)->Name("successor_sweep/parallel")->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TimesSweep<false>)->Name("times_sweep/serial")->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TimesSweep<true>)->Name("times_sweep/parallel")->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
