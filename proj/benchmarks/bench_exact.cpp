#include <benchmark/benchmark.h>

#include <random>

#include "fawaid/exact.hpp"

using namespace fawaid;

namespace {

Integer random_bits(std::mt19937_64& rng, int bits) {
  Integer n = 0;
  for (int w = 0; w < (bits + 63) / 64; ++w)
    n = (n << 64) | Integer(static_cast<unsigned long>(rng()));
  return n;
}

void BM_isqrt(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<Integer> inputs;
  for (int i = 0; i < 64; ++i) inputs.push_back(random_bits(rng, state.range(0)));
  size_t i = 0;
  for (auto _ : state) {
    Integer r = isqrt(inputs[i++ & 63]);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_isqrt)->Arg(64)->Arg(256)->Arg(512)->Arg(2048);

void BM_perfect_power_root(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::vector<Integer> cubes;
  for (int i = 0; i < 64; ++i) {
    Integer b = random_bits(rng, 96);
    cubes.push_back(b * b * b);
  }
  size_t i = 0;
  for (auto _ : state) {
    auto r = perfect_power_root(cubes[i++ & 63], 3);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_perfect_power_root);

void BM_rational_kth_root(benchmark::State& state) {
  Rational q = make_rational(2401, 144);
  for (auto _ : state) {
    auto r = rational_kth_root(q, 2);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_rational_kth_root);

void BM_rational_arith(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::vector<Rational> xs;
  for (int i = 0; i < 64; ++i)
    xs.push_back(make_rational(static_cast<long>(rng() % 100000) - 50000,
                               1 + static_cast<long>(rng() % 9999)));
  size_t i = 0;
  for (auto _ : state) {
    Rational r = xs[i & 63] * xs[(i + 1) & 63] + xs[(i + 2) & 63];
    benchmark::DoNotOptimize(r);
    ++i;
  }
}
BENCHMARK(BM_rational_arith);

}  // namespace
