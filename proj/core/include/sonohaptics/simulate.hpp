#pragma once

#include <sonohaptics/scene.hpp>
#include <sonohaptics/sphere_cast.hpp>

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>

namespace sonohaptics {

/// Head-free accuracy of the headset eye tracker the feedback was built on.
inline constexpr double kDefaultGazeNoiseDeg = 1.652;

struct SimulationOptions {
    double noise_sigma_deg = kDefaultGazeNoiseDeg;
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    double cast_radius = kDefaultCastRadius;
};

struct ObjectTally {
    std::size_t trials = 0;
    std::size_t correct = 0;
    std::size_t wrong = 0;  // resolved to another object
    std::size_t missed = 0; // resolved to nothing

    std::size_t errors() const { return wrong + missed; }
    bool operator==(const ObjectTally&) const = default;
};

struct SimulationReport {
    std::size_t trials = 0;
    double noise_sigma_deg = 0.0;
    std::size_t correct = 0;
    std::size_t wrong = 0;
    std::size_t missed = 0;
    double error_rate = 0.0;   // (wrong + missed) / trials
    double give_up_rate = 0.0; // missed / trials
    std::map<std::string, ObjectTally> per_object;

    bool operator==(const SimulationReport&) const = default;
};

/// Geometric selection proxy: each trial aims from the scene viewpoint at the
/// center of a uniformly chosen visible object, perturbs yaw and pitch by
/// independent Gaussian angles and resolves the ray with sphere_cast.
/// Throws EmptySceneError / EngineError (trials == 0).
SimulationReport simulate(const Scene& scene, const SimulationOptions& options);

/// Perturbs a unit direction by yaw then pitch (radians) about the frame
/// built from `dir` and world up.
Vec3 perturb_direction(const Vec3& dir, double yaw, double pitch);

nlohmann::json report_to_json(const SimulationReport& report);

} // namespace sonohaptics
