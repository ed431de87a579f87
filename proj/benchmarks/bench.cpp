#include <benchmark/benchmark.h>

#include "galedim/bias.hpp"
#include "galedim/fsg.hpp"
#include "galedim/gale.hpp"
#include "galedim/lz78.hpp"
#include "galedim/predictor.hpp"
#include "galedim/selfsimilar.hpp"

using namespace galedim;

namespace {

const Bits& biased_input() {
    static Bits w = sample_sequence(BiasSequence::constant(Rat(1, 4)), 1 << 20, 1);
    return w;  // callers slice a prefix of this
}

void bm_lz78_compress(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    Bits w(biased_input().begin(), biased_input().begin() + n);
    for (auto _ : state) benchmark::DoNotOptimize(lz78_compress(w));
    state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) * n / 8);
}
BENCHMARK(bm_lz78_compress)->Range(1 << 12, 1 << 20);

void bm_gale_evaluate(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    Bits w(biased_input().begin(), biased_input().begin() + n);
    SGale g = gale_from_measure(BiasSequence::constant(Rat(1, 4)), Rat(1, 2));
    for (auto _ : state) benchmark::DoNotOptimize(evaluate(g, w));
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * n);
}
BENCHMARK(bm_gale_evaluate)->Range(1 << 12, 1 << 18);

void bm_gale_evaluate_exact(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    Bits w(biased_input().begin(), biased_input().begin() + n);
    SGale g = gale_from_measure(BiasSequence::constant(Rat(1, 4)), Rat(1, 2));
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_exact(g, w));
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * n);
}
BENCHMARK(bm_gale_evaluate_exact)->Range(1 << 6, 1 << 10);

void bm_deviation_exact(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    BiasSequence third = BiasSequence::constant(Rat(1, 3));
    for (auto _ : state) benchmark::DoNotOptimize(deviation_tail_exact(third, n, 0.1));
}
BENCHMARK(bm_deviation_exact)->Range(1 << 6, 1 << 12);

void bm_deviation_mc(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    BiasSequence third = BiasSequence::constant(Rat(1, 3));
    for (auto _ : state)
        benchmark::DoNotOptimize(deviation_tail_mc(third, n, 0.1, 10000, 9));
}
BENCHMARK(bm_deviation_mc)->Range(1 << 6, 1 << 12);

void bm_fsg_run(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    Bits w(biased_input().begin(), biased_input().begin() + n);
    FiniteStateGambler g = pair_gambler(Rat(3, 4));
    for (auto _ : state) benchmark::DoNotOptimize(g.account_capitals(w));
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * n);
}
BENCHMARK(bm_fsg_run)->Range(1 << 8, 1 << 14);

void bm_box_count(benchmark::State& state) {
    SelfSimilarSystem sys{{{0, 0}, {0, 1}, {1, 0}}};
    std::size_t n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(box_count(sys, n));
}
BENCHMARK(bm_box_count)->Range(1 << 8, 1 << 12);

void bm_laplace_loss(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    Bits w(biased_input().begin(), biased_input().begin() + n);
    PredictorPtr pi = laplace_predictor();
    for (auto _ : state) benchmark::DoNotOptimize(log_loss(*pi, w));
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * n);
}
BENCHMARK(bm_laplace_loss)->Range(1 << 10, 1 << 16);

}  // namespace

BENCHMARK_MAIN();
