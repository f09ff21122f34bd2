#include <benchmark/benchmark.h>

#include "mideal/closure.hpp"
#include "mideal/graphs.hpp"
#include "mideal/persistence.hpp"
#include "mideal/primes.hpp"
#include "mideal/resolution.hpp"

namespace {

using namespace mideal;

const MonomialIdeal& fixture() {
  static const MonomialIdeal ideal = example_ideal_7vars();
  return ideal;
}

const MonomialIdeal& fixture_square() {
  static const MonomialIdeal ideal = power(fixture(), 2);
  return ideal;
}

SimpleGraph c5() {
  return SimpleGraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
}

void BM_power(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(power(fixture(), k));
}
BENCHMARK(BM_power)->Arg(2)->Arg(3);

void BM_colon_cube_by_base(benchmark::State& state) {
  const MonomialIdeal cube = power(fixture(), 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(colon_ideal(cube, fixture()));
}
BENCHMARK(BM_colon_cube_by_base);

void BM_intersect_square_with_base(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(intersect(fixture_square(), fixture()));
}
BENCHMARK(BM_intersect_square_with_base);

void BM_ass_witness(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        associated_primes(fixture_square(), AssMethod::WitnessSearch));
}
BENCHMARK(BM_ass_witness);

void BM_ass_decomp(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        associated_primes(fixture_square(), AssMethod::Decomposition));
}
BENCHMARK(BM_ass_decomp);

void BM_np_membership(benchmark::State& state) {
  const NewtonPolyhedron np(fixture_square());
  const Monomial probe({1, 1, 1, 1, 1, 1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(np.contains(probe));
}
BENCHMARK(BM_np_membership);

void BM_integral_closure_cover_square(benchmark::State& state) {
  const MonomialIdeal square = power(cover_ideal(c5()), 2);
  for (auto _ : state) benchmark::DoNotOptimize(integral_closure(square));
}
BENCHMARK(BM_integral_closure_cover_square);

void BM_betti_cover_square(benchmark::State& state) {
  const MonomialIdeal square = power(cover_ideal(c5()), 2);
  for (auto _ : state) benchmark::DoNotOptimize(betti_numbers(square));
}
BENCHMARK(BM_betti_cover_square);

} // namespace

BENCHMARK_MAIN();
