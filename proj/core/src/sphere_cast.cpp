#include <sonohaptics/sphere_cast.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace sonohaptics {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Parameter interval along the ray line for which the point is inside a primitive.
struct Span {
    double enter = kInf;
    double exit = -kInf;

    bool empty() const { return enter > exit; }
};

Span slab_1d(double o, double d, double lo, double hi)
{
    if (d == 0.0)
        return (o >= lo && o <= hi) ? Span{-kInf, kInf} : Span{};
    double t0 = (lo - o) / d;
    double t1 = (hi - o) / d;
    if (t0 > t1)
        std::swap(t0, t1);
    return {t0, t1};
}

Span intersect(Span a, Span b)
{
    return {std::max(a.enter, b.enter), std::min(a.exit, b.exit)};
}

Span box_span(const Vec3& lo, const Vec3& hi, const Vec3& o, const Vec3& d)
{
    Span s{-kInf, kInf};
    for (int k = 0; k < 3 && !s.empty(); ++k)
        s = intersect(s, slab_1d(o[k], d[k], lo[k], hi[k]));
    return s;
}

Span sphere_span(const Vec3& c, double r, const Vec3& o, const Vec3& d)
{
    const Vec3 m = o - c;
    const double b = dot(m, d);
    const double disc = b * b - (dot(m, m) - r * r);
    if (disc < 0.0)
        return {};
    const double root = std::sqrt(disc);
    return {-b - root, -b + root};
}

// Finite cylinder of radius r around the axis-k segment whose other two
// coordinates are (u, v), spanning [lo, hi] along k.
Span cylinder_span(int k, double u, double v, double lo, double hi, double r, const Vec3& o, const Vec3& d)
{
    const int i = (k + 1) % 3;
    const int j = (k + 2) % 3;
    const double mx = o[i] - u;
    const double my = o[j] - v;
    const double dx = d[i];
    const double dy = d[j];
    const double a = dx * dx + dy * dy;
    const double c = mx * mx + my * my - r * r;

    Span radial;
    if (a == 0.0) {
        if (c > 0.0)
            return {};
        radial = {-kInf, kInf};
    } else {
        const double b = mx * dx + my * dy;
        const double disc = b * b - a * c;
        if (disc < 0.0)
            return {};
        const double root = std::sqrt(disc);
        radial = {(-b - root) / a, (-b + root) / a};
    }
    return intersect(radial, slab_1d(o[k], d[k], lo, hi));
}

void consider(Span s, double& best)
{
    if (s.empty() || s.exit < 0.0)
        return;
    best = std::min(best, std::max(s.enter, 0.0));
}

} // namespace

std::optional<double> sphere_cast_entry(const Aabb& box, const Vec3& origin, const Vec3& dir, double radius)
{
    const Vec3 lo = box.min();
    const Vec3 hi = box.max();
    const Vec3 pad{radius, radius, radius};

    // Cheap reject against the enclosing padded box.
    const Span outer = box_span(lo - pad, hi + pad, origin, dir);
    if (outer.empty() || outer.exit < 0.0)
        return std::nullopt;

    double best = kInf;

    // Faces: the box grown by r along one axis at a time.
    for (int k = 0; k < 3; ++k) {
        Vec3 grow;
        (k == 0 ? grow.x : k == 1 ? grow.y : grow.z) = radius;
        consider(box_span(lo - grow, hi + grow, origin, dir), best);
    }

    // Edges.
    for (int k = 0; k < 3; ++k) {
        const int i = (k + 1) % 3;
        const int j = (k + 2) % 3;
        for (double u : {lo[i], hi[i]})
            for (double v : {lo[j], hi[j]})
                consider(cylinder_span(k, u, v, lo[k], hi[k], radius, origin, dir), best);
    }

    // Corners.
    for (double x : {lo.x, hi.x})
        for (double y : {lo.y, hi.y})
            for (double z : {lo.z, hi.z})
                consider(sphere_span({x, y, z}, radius, origin, dir), best);

    if (best == kInf)
        return std::nullopt;
    return best;
}

std::optional<CastHit> sphere_cast(const Scene& scene, const Vec3& origin, const Vec3& dir, double radius)
{
    std::optional<CastHit> hit;
    for (std::size_t i = 0; i < scene.objects.size(); ++i) {
        const SceneObject& obj = scene.objects[i];
        if (obj.hidden)
            continue;
        auto t = sphere_cast_entry(obj.bbox, origin, dir, radius);
        if (t && (!hit || *t < hit->distance))
            hit = CastHit{i, *t};
    }
    return hit;
}

} // namespace sonohaptics
