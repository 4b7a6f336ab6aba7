#include <sonohaptics/simulate.hpp>

#include <sonohaptics/error.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace sonohaptics {

Vec3 perturb_direction(const Vec3& dir, double yaw, double pitch)
{
    const Vec3 f = normalized(dir);
    Vec3 right = cross(Vec3{0.0, 1.0, 0.0}, f);
    if (norm(right) < 1e-9)
        right = Vec3{1.0, 0.0, 0.0}; // looking straight up or down
    right = normalized(right);
    const Vec3 up = cross(f, right);
    return normalized(std::cos(pitch) * (std::cos(yaw) * f + std::sin(yaw) * right) + std::sin(pitch) * up);
}

SimulationReport simulate(const Scene& scene, const SimulationOptions& options)
{
    if (options.trials == 0)
        throw EngineError("simulation needs at least one trial");
    if (!(options.cast_radius > 0.0))
        throw EngineError("cast radius must be positive");

    std::vector<std::size_t> targets;
    for (std::size_t i = 0; i < scene.objects.size(); ++i) {
        if (!scene.objects[i].hidden)
            targets.push_back(i);
    }
    if (targets.empty())
        throw EmptySceneError();

    SimulationReport report;
    report.trials = options.trials;
    report.noise_sigma_deg = options.noise_sigma_deg;
    for (std::size_t i : targets)
        report.per_object[scene.objects[i].id] = {};

    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, targets.size() - 1);
    const double sigma = options.noise_sigma_deg * std::numbers::pi / 180.0;
    std::normal_distribution<double> noise(0.0, 1.0);

    const Vec3 eye = scene.viewpoint.position;
    for (std::size_t trial = 0; trial < options.trials; ++trial) {
        const std::size_t target = targets[pick(rng)];
        const double yaw = sigma * noise(rng);
        const double pitch = sigma * noise(rng);

        const SceneObject& obj = scene.objects[target];
        const Vec3 aim = obj.bbox.center - eye;
        const Vec3 dir = norm(aim) > 0.0 ? perturb_direction(aim, yaw, pitch) : scene.viewpoint.forward;
        const auto hit = sphere_cast(scene, eye, dir, options.cast_radius);

        ObjectTally& tally = report.per_object[obj.id];
        ++tally.trials;
        if (!hit) {
            ++tally.missed;
            ++report.missed;
        } else if (hit->index == target) {
            ++tally.correct;
            ++report.correct;
        } else {
            ++tally.wrong;
            ++report.wrong;
        }
    }

    const double n = static_cast<double>(options.trials);
    report.error_rate = static_cast<double>(report.wrong + report.missed) / n;
    report.give_up_rate = static_cast<double>(report.missed) / n;
    return report;
}

nlohmann::json report_to_json(const SimulationReport& r)
{
    nlohmann::json per = nlohmann::json::object();
    for (const auto& [id, t] : r.per_object)
        per[id] = {{"trials", t.trials}, {"correct", t.correct}, {"wrong", t.wrong}, {"missed", t.missed}};
    return {
        {"trials", r.trials},
        {"noise_sigma_deg", r.noise_sigma_deg},
        {"correct", r.correct},
        {"wrong", r.wrong},
        {"missed", r.missed},
        {"error_rate", r.error_rate},
        {"give_up_rate", r.give_up_rate},
        {"per_object", per},
    };
}

} // namespace sonohaptics
