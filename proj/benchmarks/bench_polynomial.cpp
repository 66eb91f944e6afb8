#include <benchmark/benchmark.h>

#include <random>

#include "fawaid/polynomial.hpp"

using namespace fawaid;

namespace {

Polynomial random_poly(std::mt19937_64& rng, int deg) {
  std::vector<Rational> c;
  for (int i = 0; i <= deg; ++i)
    c.push_back(make_rational(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 6)));
  if (c.back() == 0) c.back() = Rational(1);
  return Polynomial(std::move(c));
}

void BM_poly_mul(benchmark::State& state) {
  std::mt19937_64 rng(5);
  Polynomial a = random_poly(rng, state.range(0));
  Polynomial b = random_poly(rng, state.range(0));
  for (auto _ : state) {
    Polynomial p = a * b;
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_poly_mul)->Arg(4)->Arg(8);

void BM_compose_shift(benchmark::State& state) {
  std::mt19937_64 rng(6);
  Polynomial p = random_poly(rng, 8);
  Rational c = make_rational(3, 2);
  for (auto _ : state) {
    Polynomial q = p.compose_shift(c);
    benchmark::DoNotOptimize(q);
  }
}
BENCHMARK(BM_compose_shift);

void BM_rational_roots_p28(benchmark::State& state) {
  Polynomial cubic = Polynomial::from_ints({2098, -603, 0, 1});
  for (auto _ : state) {
    auto roots = rational_roots(cubic);
    benchmark::DoNotOptimize(roots);
  }
}
BENCHMARK(BM_rational_roots_p28);

void BM_rational_roots_planted(benchmark::State& state) {
  // (x - 3/2)(x + 7)(x - 5)(2x - 1) cleared to integer coefficients.
  Polynomial p = Polynomial({make_rational(-3, 2), Rational(1)}) *
                 Polynomial({Rational(7), Rational(1)}) *
                 Polynomial({Rational(-5), Rational(1)}) *
                 Polynomial({make_rational(-1, 2), Rational(1)});
  for (auto _ : state) {
    auto roots = rational_roots(p);
    benchmark::DoNotOptimize(roots);
  }
}
BENCHMARK(BM_rational_roots_planted);

void BM_ferrari_split(benchmark::State& state) {
  Polynomial biq = Polynomial::from_ints({4, 0, -5, 0, 1});
  for (auto _ : state) {
    auto split = ferrari_split(biq);
    benchmark::DoNotOptimize(split);
  }
}
BENCHMARK(BM_ferrari_split);

}  // namespace
