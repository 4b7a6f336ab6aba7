#include <sonohaptics/crossmodal.hpp>

#include <sonohaptics/colorimetry.hpp>
#include <sonohaptics/error.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace sonohaptics {

std::string_view to_string(CueKind kind)
{
    switch (kind) {
    case CueKind::sonohaptics: return "sonohaptics";
    case CueKind::static_tone: return "static";
    case CueKind::silent: return "silent";
    }
    return "unknown";
}

std::optional<CueKind> parse_cue_kind(std::string_view name)
{
    if (name == "sonohaptics")
        return CueKind::sonohaptics;
    if (name == "static")
        return CueKind::static_tone;
    if (name == "silent")
        return CueKind::silent;
    return std::nullopt;
}

void validate(const FeedbackCue& cue)
{
    if (!(cue.duration_s > 0.0) || !std::isfinite(cue.duration_s))
        throw InvalidCueError("cue duration must be positive");
    if (!(cue.pan >= -1.0 && cue.pan <= 1.0))
        throw InvalidCueError("cue pan outside [-1, 1]");
    if (cue.kind == CueKind::silent)
        return;
    if (!(cue.pitch_hz > 0.0) || !std::isfinite(cue.pitch_hz))
        throw InvalidCueError("cue pitch must be positive");
    if (!(cue.amplitude >= 0.0 && cue.amplitude <= 1.0))
        throw InvalidCueError("cue amplitude outside [0, 1]");
    if (cue.kind == CueKind::sonohaptics) {
        if (cue.pitch_hz < kMapping.pitch_min_hz || cue.pitch_hz > kMapping.pitch_max_hz)
            throw InvalidCueError("cue pitch outside the C3..B5 range");
        if (cue.amplitude < kMapping.amp_min || cue.amplitude > kMapping.amp_max)
            throw InvalidCueError("cue amplitude outside [0.125, 1]");
    }
}

double pitch_polynomial(double l)
{
    return 184.05 + 0.375 * l + 0.054 * l * l;
}

double pitch_from_lightness(double lightness, bool snap_to_scale)
{
    const double l = std::clamp(lightness, kMapping.lightness_min, kMapping.lightness_max);
    double p = std::clamp(pitch_polynomial(l), kMapping.pitch_min_hz, kMapping.pitch_max_hz);
    if (snap_to_scale)
        p = quantize_to_scale(p);
    return p;
}

double amplitude_polynomial(double s)
{
    return 0.275 + 3.80e-05 * s - 6.01e-10 * s * s;
}

double amplitude_from_size(double area)
{
    const double s = std::clamp(area, kMapping.area_min, kMapping.area_max);
    return std::clamp(amplitude_polynomial(s), kMapping.amp_min, kMapping.amp_max);
}

namespace {

double map_side(double value, double lo, double hi)
{
    if (!(hi > lo))
        return 0.5 * (kMapping.side_min + kMapping.side_max);
    const double t = std::clamp((value - lo) / (hi - lo), 0.0, 1.0);
    return kMapping.side_min + t * (kMapping.side_max - kMapping.side_min);
}

} // namespace

double normalize_size(const SceneObject& obj, const SizeNormalizationParams& params)
{
    const FaceDims d = face_dims(obj);
    return map_side(d.width, params.min_w, params.max_w) * map_side(d.height, params.min_h, params.max_h);
}

double pan_from_direction(const Vec3& head_forward, const Vec3& head_pos, const Vec3& obj_pos)
{
    const Vec3 fwd{head_forward.x, 0.0, head_forward.z};
    const Vec3 to_obj{obj_pos.x - head_pos.x, 0.0, obj_pos.z - head_pos.z};
    if (norm(fwd) == 0.0 || norm(to_obj) == 0.0)
        return 0.0;
    const Vec3 f = normalized(fwd);
    const Vec3 right{f.z, 0.0, -f.x};
    const double azimuth = std::atan2(dot(to_obj, right), dot(to_obj, f));
    return std::clamp(azimuth / (std::numbers::pi / 2.0), -1.0, 1.0);
}

const std::array<double, 36>& semitone_table()
{
    static const std::array<double, 36> table = [] {
        std::array<double, 36> t{};
        for (int i = 0; i < 36; ++i) {
            const int midi = 48 + i; // C3
            const double hz = 440.0 * std::pow(2.0, (midi - 69) / 12.0);
            t[i] = std::round(hz * 100.0) / 100.0;
        }
        return t;
    }();
    return table;
}

double quantize_to_scale(double hz)
{
    const auto& table = semitone_table();
    if (!(hz > 0.0))
        return table.front();
    const double target = std::log(hz);
    double best = table.front();
    double best_dist = std::abs(std::log(best) - target);
    for (double note : table) {
        const double d = std::abs(std::log(note) - target);
        if (d < best_dist) {
            best = note;
            best_dist = d;
        }
    }
    return best;
}

ObjectFeatures extract_features(const SceneObject& obj, const SizeNormalizationParams& params)
{
    return {obj.id, obj.material, obj.position, object_lightness(obj), normalize_size(obj, params)};
}

std::vector<ObjectFeatures> extract_features(const Scene& scene)
{
    const SizeNormalizationParams params = scene_stats(scene);
    std::vector<ObjectFeatures> out;
    out.reserve(scene.objects.size());
    for (const SceneObject& obj : scene.objects) {
        if (!obj.hidden)
            out.push_back(extract_features(obj, params));
    }
    return out;
}

FeedbackCue static_cue(Material timbre, double pan)
{
    const double mid_amp = 0.5 * (kMapping.amp_min + kMapping.amp_max);
    return {CueKind::static_tone, kStaticPitchHz, mid_amp, pan, timbre, kStaticDurationS};
}

FeedbackCue silent_cue(Material timbre, double duration_s)
{
    return {CueKind::silent, 0.0, 0.0, 0.0, timbre, duration_s};
}

FeedbackCue global_cue(const ObjectFeatures& f, const HeadPose& head, const CueOptions& options)
{
    const double pan = pan_from_direction(head.forward, head.position, f.position);
    switch (options.kind) {
    case CueKind::static_tone: return static_cue(f.material, pan);
    case CueKind::silent: return silent_cue(f.material, options.duration_s);
    case CueKind::sonohaptics: break;
    }
    return {CueKind::sonohaptics, pitch_from_lightness(f.lightness, options.snap_to_scale),
            amplitude_from_size(f.area), pan, f.material, options.duration_s};
}

FeedbackCue global_cue(const SceneObject& obj, const SizeNormalizationParams& params, const HeadPose& head,
                       const CueOptions& options)
{
    if (options.kind == CueKind::sonohaptics)
        return global_cue(extract_features(obj, params), head, options);
    // The baselines ignore lightness, so textures are never touched.
    return global_cue(ObjectFeatures{obj.id, obj.material, obj.position, 0.0, 0.0}, head, options);
}

std::vector<ObjectFeatures> local_cluster(std::span<const ObjectFeatures> objects, const ObjectFeatures& anchor,
                                          double radius)
{
    std::vector<ObjectFeatures> cluster;
    for (const ObjectFeatures& f : objects) {
        if (f.id == anchor.id || distance(f.position, anchor.position) <= radius)
            cluster.push_back(f);
    }
    return cluster;
}

LocalAssignments local_assignments(std::span<const ObjectFeatures> cluster)
{
    if (cluster.empty())
        throw EngineError("local cluster is empty");

    const std::size_t k = cluster.size();
    LocalAssignments out;
    if (k == 1) {
        out[cluster[0].id] = {0.5 * (kMapping.pitch_min_hz + kMapping.pitch_max_hz),
                              0.5 * (kMapping.amp_min + kMapping.amp_max)};
        return out;
    }

    std::vector<std::size_t> order(k);
    auto spread = [k](double lo, double hi, std::size_t rank) {
        return rank + 1 == k ? hi : lo + (hi - lo) * static_cast<double>(rank) / static_cast<double>(k - 1);
    };

    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (cluster[a].lightness != cluster[b].lightness)
            return cluster[a].lightness < cluster[b].lightness;
        return cluster[a].id < cluster[b].id;
    });
    for (std::size_t rank = 0; rank < k; ++rank)
        out[cluster[order[rank]].id].pitch_hz = spread(kMapping.pitch_min_hz, kMapping.pitch_max_hz, rank);

    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (cluster[a].area != cluster[b].area)
            return cluster[a].area < cluster[b].area;
        return cluster[a].id < cluster[b].id;
    });
    for (std::size_t rank = 0; rank < k; ++rank)
        out[cluster[order[rank]].id].amplitude = spread(kMapping.amp_min, kMapping.amp_max, rank);

    if (out.size() != k)
        throw EngineError("local cluster contains duplicate ids");
    return out;
}

} // namespace sonohaptics
