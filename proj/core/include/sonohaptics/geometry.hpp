#pragma once

#include <cmath>

namespace sonohaptics {

/// Scene-space vector. Axes: +x right, +y up, +z forward (meters).
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    constexpr bool operator==(const Vec3&) const = default;

    constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b)
{
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

/// Unit vector along v; v must be nonzero.
inline Vec3 normalized(const Vec3& v) { return v / norm(v); }

/// Axis-aligned box. `extents` are full edge lengths, not half sizes.
struct Aabb {
    Vec3 center;
    Vec3 extents;

    constexpr Vec3 half() const { return extents * 0.5; }
    constexpr Vec3 min() const { return center - half(); }
    constexpr Vec3 max() const { return center + half(); }
};

} // namespace sonohaptics
