#include <sonohaptics/sphere_cast.hpp>

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace sonohaptics;

Scene random_scene(std::size_t n, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> pos(-3.0, 3.0);
    std::uniform_real_distribution<double> ext(0.05, 0.8);
    Scene scene;
    for (std::size_t i = 0; i < n; ++i) {
        SceneObject obj;
        obj.id = "o" + std::to_string(i);
        obj.position = {pos(rng), pos(rng) + 1.0, pos(rng) + 5.0};
        obj.bbox = {obj.position, {ext(rng), ext(rng), ext(rng)}};
        scene.objects.push_back(obj);
    }
    return scene;
}

void BM_SphereCastEntry(benchmark::State& state)
{
    const Aabb box{{0.2, 1.1, 4.0}, {0.4, 0.3, 0.2}};
    const Vec3 origin{0.0, 1.2, 0.0};
    const Vec3 dir = normalized(Vec3{0.05, -0.02, 1.0});
    for (auto _ : state)
        benchmark::DoNotOptimize(sphere_cast_entry(box, origin, dir, 0.5));
}
BENCHMARK(BM_SphereCastEntry);

void BM_SphereCastScene(benchmark::State& state)
{
    std::mt19937_64 rng(7);
    const Scene scene = random_scene(static_cast<std::size_t>(state.range(0)), rng);
    std::normal_distribution<double> d(0.0, 0.3);
    std::vector<Vec3> dirs;
    for (int i = 0; i < 256; ++i)
        dirs.push_back(normalized(Vec3{d(rng), d(rng), 1.0}));
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(sphere_cast(scene, {0.0, 1.2, 0.0}, dirs[i++ & 255], 0.5));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SphereCastScene)->Arg(10)->Arg(24)->Arg(100);

} // namespace
