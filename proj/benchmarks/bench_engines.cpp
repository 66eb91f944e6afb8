#include <benchmark/benchmark.h>

#include "fawaid/engines.hpp"

using namespace fawaid;

namespace {

const ProblemSpec& problem(int id) { return get_problem(bundled_catalog(), id); }

void BM_reduce_21(benchmark::State& state) {
  for (auto _ : state) {
    auto t = reduce_problem(problem(21), {});
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_reduce_21);

void BM_reduce_28(benchmark::State& state) {
  for (auto _ : state) {
    auto t = reduce_problem(problem(28), {});
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_reduce_28);

void BM_decide_28(benchmark::State& state) {
  for (auto _ : state) {
    auto c = decide_rational(problem(28), {});
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_decide_28);

void BM_congruum_n5(benchmark::State& state) {
  for (auto _ : state) {
    auto w = congruum_triples(Integer(5), Integer(12));
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_congruum_n5);

void BM_congruum_n10_k100(benchmark::State& state) {
  for (auto _ : state) {
    auto w = congruum_triples(Integer(10), Integer(100));
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_congruum_n10_k100);

void BM_search_p1(benchmark::State& state) {
  for (auto _ : state) {
    auto c = search_integer(problem(1), {}, Integer(state.range(0)), 1);
    benchmark::DoNotOptimize(c);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_search_p1)->Arg(100)->Arg(300)->Arg(1000)->Complexity();

void BM_search_p1_threads(benchmark::State& state) {
  for (auto _ : state) {
    auto c = search_integer(problem(1), {}, Integer(1000),
                            static_cast<unsigned>(state.range(0)));
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_search_p1_threads)->Arg(1)->Arg(2);

void BM_search_p3(benchmark::State& state) {
  for (auto _ : state) {
    auto c = search_integer(problem(3), {}, Integer(100), 1);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_search_p3);

void BM_sum_two_cubes_taxicab(benchmark::State& state) {
  for (auto _ : state) {
    auto v = sum_two_cubes(Integer(1729), Integer(13));
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_sum_two_cubes_taxicab);

}  // namespace

BENCHMARK_MAIN();
