#pragma once

#include <sonohaptics/geometry.hpp>
#include <sonohaptics/scene.hpp>

#include <cstddef>
#include <optional>

namespace sonohaptics {

inline constexpr double kDefaultCastRadius = 0.5;

/// Distance along a unit ray at which a sphere of `radius` swept from
/// `origin` first touches `box`, i.e. the ray's entry into the box's
/// Minkowski sum with the sphere (a rounded box). 0 when the sphere already
/// overlaps the box at the origin; nullopt when it never does for t >= 0.
std::optional<double> sphere_cast_entry(const Aabb& box, const Vec3& origin, const Vec3& dir, double radius);

struct CastHit {
    std::size_t index = 0; // into Scene::objects
    double distance = 0.0;
};

/// Nearest visible object touched by the swept sphere. Equal entry distances
/// resolve to the earlier object in scene order.
std::optional<CastHit> sphere_cast(const Scene& scene, const Vec3& origin, const Vec3& dir, double radius);

} // namespace sonohaptics
