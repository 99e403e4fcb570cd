#include <benchmark/benchmark.h>

#include "bernbound/binomial.hpp"
#include "bernbound/bounds.hpp"
#include "bernbound/enclosure.hpp"
#include "bernbound/grids.hpp"

namespace {

using namespace bernbound;

void BM_weight_table_build(benchmark::State& state) {
  const unsigned long n = static_cast<unsigned long>(state.range(0));
  const Rational p(1, 2);
  for (auto _ : state) {
    WeightTable table(n, p);
    benchmark::DoNotOptimize(table.total());
  }
}
BENCHMARK(BM_weight_table_build)->Arg(50)->Arg(200);

void BM_ratio_certification(benchmark::State& state) {
  const WeightTable table(200, Rational(1, 2));
  const Enclosure factor = enclose_exp(Rational(1, 25), 128);
  const mpz_class w1 = table.range_weight(101, 104);
  const mpz_class w2 = table.range_weight(105, 108);
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify_weighted_ge(w1, factor, w2));
  }
}
BENCHMARK(BM_ratio_certification);

void BM_enclose_exp(benchmark::State& state) {
  const Rational arg(2, 25);
  for (auto _ : state) {
    Enclosure e = enclose_exp(arg, 128);
    benchmark::DoNotOptimize(e.midpoint());
  }
}
BENCHMARK(BM_enclose_exp);

void BM_exact_tail(benchmark::State& state) {
  const WeightTable table(200, Rational(1, 2));
  const Rational eps(1, 10);
  for (auto _ : state) {
    RationalProb tail =
        tail_probability(table, eps, Side::two, Boundary::strict);
    benchmark::DoNotOptimize(tail.to_double());
  }
}
BENCHMARK(BM_exact_tail);

void BM_log_tail_large_n(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(tail_probability_log(
        1000000, 0.5, 0.001, Side::two, Boundary::strict));
  }
}
BENCHMARK(BM_log_tail_large_n);

void BM_group_decomposition(benchmark::State& state) {
  const DiscreteGrid grid(33, 15, 2);
  for (auto _ : state) {
    GroupDecomposition decomposition = group_decomposition(grid);
    benchmark::DoNotOptimize(decomposition.total());
  }
}
BENCHMARK(BM_group_decomposition);

}  // namespace

BENCHMARK_MAIN();
