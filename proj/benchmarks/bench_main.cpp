#include <snakecf/markov.hpp>
#include <snakecf/matchings.hpp>

#include <benchmark/benchmark.h>

using namespace snakecf;

static void BM_CountMatchings(benchmark::State& state) {
    const SnakeGraph sg = christoffel_snake(Slope(1, static_cast<Coeff>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_matchings(sg));
    }
    state.SetComplexityN(static_cast<std::int64_t>(sg.tile_count()));
}
BENCHMARK(BM_CountMatchings)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

static void BM_EnumerateMatchings(benchmark::State& state) {
    std::vector<Step> steps(static_cast<std::size_t>(state.range(0)) - 1);
    for (std::size_t i = 0; i < steps.size(); ++i) {
        steps[i] = i % 2 == 0 ? Step::east : Step::north;
    }
    const SnakeGraph sg = SnakeGraph::from_steps(steps);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_matchings(sg).size());
    }
}
BENCHMARK(BM_EnumerateMatchings)->DenseRange(8, 20, 4);

static void BM_MarkovNumber(benchmark::State& state) {
    const auto q = static_cast<Coeff>(state.range(0));
    const Slope s(q / 2 - 1 + (q % 2), q);
    for (auto _ : state) {
        benchmark::DoNotOptimize(markov_number(s));
    }
}
BENCHMARK(BM_MarkovNumber)->Arg(15)->Arg(39)->Arg(69);

static void BM_CheckConjecture(benchmark::State& state) {
    // 3/7 has m = 2897; 4/11 is larger, 1/12 larger still.
    const std::vector<Slope> slopes{Slope(3, 7), Slope(4, 11), Slope(1, 12)};
    const Slope s = slopes.at(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_conjecture(s).coincide);
    }
    state.SetLabel(s.to_string());
}
BENCHMARK(BM_CheckConjecture)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

static void BM_MarkovTree(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(markov_tree(40, static_cast<unsigned>(state.range(0))).size());
    }
}
BENCHMARK(BM_MarkovTree)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
