#include <benchmark/benchmark.h>

#include "sadic/cones.hpp"
#include "sadic/config.hpp"
#include "sadic/measures.hpp"
#include "sadic/oracle.hpp"

using namespace sadic;

namespace {

MeasureTower probability_tower(const DirectiveSequence& seq, int depth) {
    RatVec top(static_cast<size_t>(seq.alphabet(depth).size()), Rat(1));
    return MeasureTower::from_top_vector(seq, depth, top).normalized_to_probability();
}

void BM_TelescopedIncidence(benchmark::State& state) {
    const int depth = static_cast<int>(state.range(0));
    for (auto _ : state) {
        // Fresh sequence each round so the memo does not hide the work.
        DirectiveSequence seq = preset_sequence("tribonacci", depth);
        benchmark::DoNotOptimize(seq.telescoped_incidence(0, depth));
    }
}

void BM_Expand(benchmark::State& state) {
    const int level = static_cast<int>(state.range(0));
    DirectiveSequence seq = preset_sequence("thue-morse", level + 1);
    Expander expander(seq, ExpansionBudget{1LL << 34, false});
    int64_t symbols = 0;
    for (auto _ : state) {
        Word w = expander.expand(level, 0);
        symbols += w.length();
        benchmark::DoNotOptimize(w);
    }
    state.SetItemsProcessed(symbols);
}

void BM_CountOccurrences(benchmark::State& state) {
    DirectiveSequence seq = preset_sequence("fibonacci", 25);
    Word sample = Expander(seq, ExpansionBudget{1 << 20, false}).expand(24, 0);
    Word factor = Word::parse(seq.alphabet(0), "aab");
    int64_t symbols = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_occurrences(sample, factor));
        symbols += sample.length();
    }
    state.SetItemsProcessed(symbols);
}

void BM_EstimateConeDim(benchmark::State& state) {
    const int depth = static_cast<int>(state.range(0));
    for (auto _ : state) {
        DirectiveSequence seq = preset_sequence("two-copies", depth);
        benchmark::DoNotOptimize(estimate_cone_dim(seq, 0, depth, 1e-8));
    }
}

void BM_CheckThin(benchmark::State& state) {
    const int depth = static_cast<int>(state.range(0));
    for (auto _ : state) {
        DirectiveSequence seq = preset_sequence("fibonacci", depth);
        benchmark::DoNotOptimize(check_thin(seq, depth, 1e-8));
    }
}

void BM_CylinderMeasure(benchmark::State& state) {
    const int level = static_cast<int>(state.range(0));
    DirectiveSequence seq = preset_sequence("fibonacci", level + 5);
    MeasureTower tower = probability_tower(seq, level + 2);
    Word w = Word::parse(seq.alphabet(0), "aba");
    for (auto _ : state) {
        benchmark::DoNotOptimize(cylinder_measure(tower, w, level));
    }
}

void BM_TowerLift(benchmark::State& state) {
    const int depth = static_cast<int>(state.range(0));
    DirectiveSequence seq = preset_sequence("thue-morse", depth + 5);
    RatVec v0{Rat(1, 2), Rat(1, 2)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(unique_tower_from_letters(seq, v0, depth, 1e-8));
    }
}

} // namespace

BENCHMARK(BM_TelescopedIncidence)->Arg(30)->Arg(100)->Arg(300);
BENCHMARK(BM_Expand)->Arg(15)->Arg(20)->Arg(24);
BENCHMARK(BM_CountOccurrences);
BENCHMARK(BM_EstimateConeDim)->Arg(20)->Arg(40);
BENCHMARK(BM_CheckThin)->Arg(15)->Arg(30);
BENCHMARK(BM_CylinderMeasure)->Arg(10)->Arg(18);
BENCHMARK(BM_TowerLift)->Arg(10)->Arg(20);

BENCHMARK_MAIN();
