#pragma once

#include <sonohaptics/scene.hpp>

#include <array>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sonohaptics {

/// Output ranges of the perception study and the input domains the two
/// regression models were fitted on.
struct MappingConstants {
    double pitch_min_hz = 130.81; // C3
    double pitch_max_hz = 987.77; // B5
    double amp_min = 0.125;
    double amp_max = 1.0;
    double side_min = 46.0;       // study units
    double side_max = 147.0;
    double area_min = 46.0 * 46.0;
    double area_max = 147.0 * 147.0;
    double lightness_min = 0.0;   // CIELAB L
    double lightness_max = 100.0;
};

inline constexpr MappingConstants kMapping{};

static_assert(kMapping.pitch_min_hz < kMapping.pitch_max_hz);
static_assert(kMapping.amp_min < kMapping.amp_max && kMapping.amp_max <= 1.0);
static_assert(kMapping.area_min == 2116.0 && kMapping.area_max == 21609.0);
static_assert(kMapping.lightness_min == 0.0 && kMapping.lightness_max == 100.0);

inline constexpr double kStaticPitchHz = 220.0;
inline constexpr double kStaticDurationS = 0.2;
inline constexpr double kDefaultCueDurationS = 0.2;

enum class CueKind { sonohaptics, static_tone, silent };

std::string_view to_string(CueKind kind);
std::optional<CueKind> parse_cue_kind(std::string_view name);

struct FeedbackCue {
    CueKind kind = CueKind::sonohaptics;
    double pitch_hz = 0.0;
    double amplitude = 0.0;
    double pan = 0.0;
    Material timbre = Material::plastic;
    double duration_s = kDefaultCueDurationS;

    bool operator==(const FeedbackCue&) const = default;
};

/// Throws InvalidCueError when a range invariant is violated.
void validate(const FeedbackCue& cue);

struct HeadPose {
    Vec3 position;
    Vec3 forward{0.0, 0.0, 1.0};
};

struct CueOptions {
    CueKind kind = CueKind::sonohaptics;
    bool snap_to_scale = false;
    double duration_s = kDefaultCueDurationS;
};

// Lightness -> pitch: p = 184.05 + 0.375 l + 0.054 l^2, l = CIELAB L.
double pitch_polynomial(double lightness);
double pitch_from_lightness(double lightness, bool snap_to_scale = false);

// Area -> haptic amplitude: a = 0.275 + 3.80e-05 s - 6.01e-10 s^2, s in study units^2.
double amplitude_polynomial(double area);
double amplitude_from_size(double area);

/// Maps the object's width and height linearly from the scene extrema onto the
/// study side range [46, 147] and returns their product. A degenerate axis maps
/// to the midpoint 96.5.
double normalize_size(const SceneObject& obj, const SizeNormalizationParams& params);

/// Signed horizontal azimuth of the object in the head frame over 90 degrees,
/// clamped to [-1, 1]. Positive is to the right.
double pan_from_direction(const Vec3& head_forward, const Vec3& head_pos, const Vec3& obj_pos);

/// Equal-temperament notes C3..B5, in Hz rounded to 0.01.
const std::array<double, 36>& semitone_table();

/// Nearest note of semitone_table() in log-frequency.
double quantize_to_scale(double hz);

/// Visual properties resolved once per object.
struct ObjectFeatures {
    std::string id;
    Material material = Material::plastic;
    Vec3 position;
    double lightness = 0.0; // CIELAB L
    double area = 0.0;      // normalized, study units^2
};

ObjectFeatures extract_features(const SceneObject& obj, const SizeNormalizationParams& params);

/// Features of every visible object, in scene order.
std::vector<ObjectFeatures> extract_features(const Scene& scene);

FeedbackCue global_cue(const ObjectFeatures& features, const HeadPose& head, const CueOptions& options = {});
FeedbackCue global_cue(const SceneObject& obj, const SizeNormalizationParams& params, const HeadPose& head,
                       const CueOptions& options = {});

/// The fixed-tone baseline: 220 Hz for 0.2 s with the midrange haptic amplitude.
FeedbackCue static_cue(Material timbre, double pan);

FeedbackCue silent_cue(Material timbre, double duration_s = kDefaultCueDurationS);

struct LocalAssignment {
    double pitch_hz = 0.0;
    double amplitude = 0.0;

    bool operator==(const LocalAssignment&) const = default;
};

using LocalAssignments = std::map<std::string, LocalAssignment, std::less<>>;

/// Objects whose centers lie within `radius` of the anchor's center, anchor
/// included, in input order.
std::vector<ObjectFeatures> local_cluster(std::span<const ObjectFeatures> objects, const ObjectFeatures& anchor,
                                          double radius);

/// Ranks the cluster by lightness (for pitch) and independently by area (for
/// amplitude), then spreads the ranks evenly over the full output ranges.
/// Ties break on id. A single object gets the range midpoints.
/// Throws EngineError for an empty cluster.
LocalAssignments local_assignments(std::span<const ObjectFeatures> cluster);

} // namespace sonohaptics
