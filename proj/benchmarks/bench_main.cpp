#include <benchmark/benchmark.h>

#include "affkm/description.hpp"
#include "affkm/mad.hpp"
#include "affkm/sampling.hpp"
#include "affkm/spectral.hpp"

using namespace affkm;

namespace {

LoopAlgebraPtr flip() {
  static LoopAlgebraPtr alg = build_algebra(parse_description("schema 1\ntype A2\ndiagram 2 1\n"));
  return alg;
}

}  // namespace

static void BM_LoopBracket(benchmark::State& state) {
  auto alg = load_algebra("D" + std::to_string(state.range(0)));
  Rng rng(1);
  LoopElt x = random_loop(*alg, rng, -4, 4, 8), y = random_loop(*alg, rng, -4, 4, 8);
  for (auto _ : state) benchmark::DoNotOptimize(bracket_loop(x, y));
}
BENCHMARK(BM_LoopBracket)->DenseRange(4, 8, 2);

static void BM_AffineBracketTwisted(benchmark::State& state) {
  auto alg = flip();
  Rng rng(2);
  AffineElt x = random_affine(*alg, rng, -6, 6, true, true, 8), y = random_affine(*alg, rng, -6, 6, true, true, 8);
  for (auto _ : state) benchmark::DoNotOptimize(bracket_affine(x, y));
}
BENCHMARK(BM_AffineBracketTwisted);

static void BM_BuildChevalley(benchmark::State& state) {
  const std::string label = "A" + std::to_string(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ChevAlgebra::build(make_datum(label)));
}
BENCHMARK(BM_BuildChevalley)->DenseRange(2, 8, 3)->Unit(benchmark::kMillisecond);

static void BM_WeightDecompClosedForm(benchmark::State& state) {
  auto alg = flip();
  const int r = static_cast<int>(state.range(0));
  Window w = Window::make(*alg, -r, r);
  AffineElt x = regular_element(*alg);
  for (auto _ : state) benchmark::DoNotOptimize(weight_decompose(*alg, x, w));
  state.counters["window"] = static_cast<double>(w.size());
}
BENCHMARK(BM_WeightDecompClosedForm)->Arg(6)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_WeightDecompConjugated(benchmark::State& state) {
  auto alg = flip();
  Rng rng(3);
  AffineElt x = apply_word(random_word(*alg, rng, Level::Hat, 3), regular_element(*alg));
  const int r = static_cast<int>(state.range(0)) + x.loop.degree_radius();
  Window w = Window::make(*alg, -r, r);
  for (auto _ : state) benchmark::DoNotOptimize(weight_decompose(*alg, x, w));
  state.counters["window"] = static_cast<double>(w.size());
}
BENCHMARK(BM_WeightDecompConjugated)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_IsDiagonalizableStandard(benchmark::State& state) {
  auto alg = load_algebra("A" + std::to_string(state.range(0)));
  Window w = Window::make(*alg, -3, 3, true, true);
  SubalgebraSpec h = standard_mad(*alg);
  for (auto _ : state) benchmark::DoNotOptimize(is_diagonalizable(*alg, h, w));
}
BENCHMARK(BM_IsDiagonalizableStandard)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(4);
  Matrix a(3, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rng.uniform(0, 3) == 0) a(i, j) = CycScalar(3, rng.uniform(-5, 5), rng.uniform(-5, 5));
  for (auto _ : state) benchmark::DoNotOptimize(rref(a));
}
BENCHMARK(BM_Rref)->Arg(16)->Arg(48)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
