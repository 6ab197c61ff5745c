#include <benchmark/benchmark.h>

#include "banbury/corpus.hpp"
#include "banbury/generators.hpp"
#include "banbury/markov.hpp"
#include "banbury/reference_data.hpp"
#include "banbury/repeats.hpp"
#include "banbury/subtractor.hpp"
#include "banbury/transposition.hpp"
#include "banbury/vigenere.hpp"

using namespace banbury;

static void BM_SlideCoefficients(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(subtractor::slide_coefficients(k, 25));
}
BENCHMARK(BM_SlideCoefficients)->Arg(3)->Arg(30)->Arg(100);

static void BM_RankKeys(benchmark::State& state) {
    auto dist = LetterDistribution::from_counts(reference::english_1000_counts());
    auto table = vigenere::ColumnScoreTable::build(dist, 9);
    gen::Rng rng(1);
    auto column = gen::sample_letters(dist, static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(vigenere::rank_keys(column, table));
}
BENCHMARK(BM_RankKeys)->Arg(10)->Arg(100)->Arg(1000);

static void BM_KeyPosterior(benchmark::State& state) {
    auto dist = LetterDistribution::from_counts(reference::english_1000_counts());
    gen::Rng rng(2);
    auto column = gen::sample_letters(dist, static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(vigenere::key_posterior(column, dist));
}
BENCHMARK(BM_KeyPosterior)->Arg(10)->Arg(1000);

static void BM_RgramCounts(benchmark::State& state) {
    gen::Rng rng(3);
    auto text = gen::english_like_text(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(RgramCounts::from_letters(text, 8));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RgramCounts)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

static void BM_GeneralFitScore(benchmark::State& state) {
    gen::Rng rng(4);
    auto text = gen::english_like_text(50'000, rng);
    auto p = repeats::estimate_params(RgramCounts::from_letters(text, 8), LetterDistribution::from_letters(text), 6);
    auto a = gen::english_like_text(200, rng);
    auto b = gen::english_like_text(200, rng);
    auto fig = repeats::repetition_figure(a, b, 0);
    for (auto _ : state) benchmark::DoNotOptimize(repeats::general_fit_score(fig, p));
}
BENCHMARK(BM_GeneralFitScore);

static void BM_BottomOfColumn(benchmark::State& state) {
    for (auto _ : state)
        for (long long k = 10; k <= 20; ++k) benchmark::DoNotOptimize(transposition::bottom_of_column_probability(133, k, 45));
}
BENCHMARK(BM_BottomOfColumn);

static void BM_ScanAlignments(benchmark::State& state) {
    gen::Rng rng(5);
    auto stats = BigramStats::from_letters(gen::english_like_text(50'000, rng), true);
    auto table = transposition::ExclusiveBigramTable::from_stats(stats);
    auto message = gen::english_like_text(static_cast<std::size_t>(state.range(0)), rng);
    auto probe = message.substr(0, 8);
    for (auto _ : state) benchmark::DoNotOptimize(transposition::scan_alignments(probe, message, table));
}
BENCHMARK(BM_ScanAlignments)->Arg(100)->Arg(10'000);

static void BM_StationarityCheck(benchmark::State& state) {
    gen::Rng rng(6);
    auto q = markov::TransitionMatrix::from_bigrams(BigramStats::from_letters(gen::english_like_text(100'000, rng), true));
    for (auto _ : state) benchmark::DoNotOptimize(markov::stationarity_check(q, 1e-9, 200));
}
BENCHMARK(BM_StationarityCheck)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
