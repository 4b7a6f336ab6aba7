#include <sonohaptics/synthesis.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace sonohaptics;

void BM_RenderCueAudio(benchmark::State& state)
{
    const auto material = static_cast<Material>(state.range(0));
    const FeedbackCue cue{CueKind::sonohaptics, 440.0, 0.5, 0.3, material, 0.2};
    for (auto _ : state)
        benchmark::DoNotOptimize(render_cue_audio(cue));
}
BENCHMARK(BM_RenderCueAudio)->DenseRange(0, 6)->Unit(benchmark::kMicrosecond);

void BM_RenderCueHaptics(benchmark::State& state)
{
    const FeedbackCue cue{CueKind::sonohaptics, 440.0, 0.5, 0.3, Material::wood, 0.2};
    for (auto _ : state)
        benchmark::DoNotOptimize(render_cue_haptics(cue));
}
BENCHMARK(BM_RenderCueHaptics);

} // namespace
