#include <sonohaptics/colorimetry.hpp>

#include <benchmark/benchmark.h>

#include <vector>

namespace {

using namespace sonohaptics;

void BM_SrgbToLab(benchmark::State& state)
{
    std::uint8_t v = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(srgb_to_lab({v, static_cast<std::uint8_t>(v * 3), static_cast<std::uint8_t>(v * 7)}));
        ++v;
    }
}
BENCHMARK(BM_SrgbToLab);

void BM_MeanLightness(benchmark::State& state)
{
    std::vector<Rgb8> pixels(static_cast<std::size_t>(state.range(0)));
    for (std::size_t i = 0; i < pixels.size(); ++i)
        pixels[i] = {static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(i >> 3), static_cast<std::uint8_t>(i >> 5)};
    for (auto _ : state)
        benchmark::DoNotOptimize(mean_lightness(pixels));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MeanLightness)->Arg(32 * 32)->Arg(512 * 512);

} // namespace
