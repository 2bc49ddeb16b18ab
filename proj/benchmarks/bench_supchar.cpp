#include <random>

#include <benchmark/benchmark.h>

#include "supchar/table_analysis.hpp"

using namespace supchar;

namespace {

Family family_arg(std::int64_t k) { return k == 0 ? Family::B : k == 1 ? Family::C : Family::D; }

void BM_Classify(benchmark::State& state) {
  const GroupModel g(family_arg(state.range(0)), static_cast<int>(state.range(1)), FieldCtx(5, 1));
  std::mt19937_64 rng(1);
  std::vector<LieElement> sample;
  for (int k = 0; k < 64; ++k) {
    Coords c(g.rank());
    for (auto& x : c) x = static_cast<FieldElement>(rng() % 5);
    sample.push_back(g.lie_from_coords(c));
  }
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(g, sample[k++ % sample.size()]));
  }
}
BENCHMARK(BM_Classify)->ArgsProduct({{0, 1, 2}, {3, 5, 8}});

void BM_SuperclassPartition(benchmark::State& state) {
  const GroupModel g(family_arg(state.range(0)), 2, FieldCtx(static_cast<unsigned>(state.range(1)), 1));
  const auto pairs = enumerate_basic_pairs(g.roots(), g.field());
  for (auto _ : state) {
    SuperclassPartition part(g, pairs, 1000000);
    benchmark::DoNotOptimize(part.sizes().data());
  }
}
BENCHMARK(BM_SuperclassPartition)->ArgsProduct({{0, 1, 2}, {3, 5, 7}})->Unit(benchmark::kMillisecond);

void BM_ClosedFormValue(benchmark::State& state) {
  const GroupModel g(Family::C, static_cast<int>(state.range(0)), FieldCtx(3, 1));
  const Supercharacters sc(g);
  const auto pairs = enumerate_basic_pairs(g.roots(), g.field());
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sc.value(pairs[k % pairs.size()], pairs[(k * 7 + 3) % pairs.size()]));
    ++k;
  }
}
BENCHMARK(BM_ClosedFormValue)->DenseRange(2, 5);

void BM_BuildTable(benchmark::State& state) {
  const GroupModel g(family_arg(state.range(0)), 2, FieldCtx(static_cast<unsigned>(state.range(1)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(build_table(g, 1000000).dimension());
}
BENCHMARK(BM_BuildTable)->ArgsProduct({{0, 1}, {3, 5}})->Unit(benchmark::kMillisecond);

void BM_Convolution(benchmark::State& state) {
  const GroupModel g(family_arg(state.range(0)), 2, FieldCtx(3, 1));
  const auto pairs = enumerate_basic_pairs(g.roots(), g.field());
  const SuperclassPartition part(g, pairs, 10000);
  const BruteForce bf(g, 10000);
  const ConvolutionAlgebra alg(bf, part);
  const SuperTable t = build_table(g, part);
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& f = t.values[k % t.dimension()];
    benchmark::DoNotOptimize(alg.convolve(f, f));
    ++k;
  }
}
BENCHMARK(BM_Convolution)->DenseRange(0, 2);

}  // namespace

BENCHMARK_MAIN();
