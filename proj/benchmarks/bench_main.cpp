#include <benchmark/benchmark.h>

#include "postlie/enumerate.hpp"
#include "postlie/grafting.hpp"
#include "postlie/morphism.hpp"
#include "postlie/syntax.hpp"
#include "postlie/tree_postlie.hpp"

using namespace postlie;

namespace {

void BM_DeformedGraft(benchmark::State& state) {
  EnumParams p;
  p.max_edges = static_cast<std::size_t>(state.range(0));
  const auto trees = enumerate_trees(p);
  const DecVec a{1, 1};
  for (auto _ : state)
    for (std::size_t i = 0; i < trees.size(); i += 7)
      benchmark::DoNotOptimize(deformed_graft(trees[i], a, trees[(i * 13) % trees.size()]));
  state.counters["trees"] = static_cast<double>(trees.size());
}
BENCHMARK(BM_DeformedGraft)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_EnumerateTrees(benchmark::State& state) {
  EnumParams p;
  p.max_edges = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_trees(p));
}
BENCHMARK(BM_EnumerateTrees)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_TreeStar(benchmark::State& state) {
  const std::size_t d = 2;
  const auto x = "X_0 ; I[(1,0)](Xi) ; I[(0,1)](X^(1,0))";
  const auto y = "X_1 ; I[(1,1)](Xi I[(0,0)](1))";
  for (auto _ : state) {
    TreeEnvelope env{TreeAlgebra(d)};
    benchmark::DoNotOptimize(env.star(parse_tree_env(x, env), parse_tree_env(y, env)));
  }
}
BENCHMARK(BM_TreeStar)->Unit(benchmark::kMillisecond);

void BM_MIStar(benchmark::State& state) {
  const std::size_t d = 2;
  for (auto _ : state) {
    MIEnvelope env{MIAlgebra(d)};
    benchmark::DoNotOptimize(
        env.star(parse_mi_env("d_0 ; z_1 D(1,0) ; z(1,0) D(0,1)", env), parse_mi_env("d_1 ; z_0 z_2 D(1,1)", env)));
  }
}
BENCHMARK(BM_MIStar)->Unit(benchmark::kMillisecond);

void BM_Star2(benchmark::State& state) {
  const std::size_t d = 2;
  TreeEnvelope env{TreeAlgebra(d)};
  auto sigma = parse_tree_env("X_0 ; X_1 ; I[(1,0)](Xi) ; I[(0,0)](X^(0,1))", env).begin()->first;
  auto tau = parse_tree("X^(1,0) Xi I[(0,1)](X^(1,1))", d);
  for (auto _ : state) benchmark::DoNotOptimize(star2(env, sigma, tau, {1, 1}));
}
BENCHMARK(BM_Star2)->Unit(benchmark::kMillisecond);

void BM_PsiHat(benchmark::State& state) {
  EnumParams p;
  p.max_edges = 3;
  const auto trees = enumerate_t0_trees(p, 2);
  for (auto _ : state)
    for (const auto& t : trees) benchmark::DoNotOptimize(psi_hat(V0Basis(T0Planted{{1, 0}, t})));
  state.counters["trees"] = static_cast<double>(trees.size());
}
BENCHMARK(BM_PsiHat)->Unit(benchmark::kMillisecond);

void BM_PlanarNormalize(benchmark::State& state) {
  EnumParams p;
  p.max_edges = 4;
  const auto trees = enumerate_planar_trees(p);
  for (auto _ : state)
    for (const auto& t : trees) benchmark::DoNotOptimize(planar_normalize(t, p.components()));
  state.counters["trees"] = static_cast<double>(trees.size());
}
BENCHMARK(BM_PlanarNormalize)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
