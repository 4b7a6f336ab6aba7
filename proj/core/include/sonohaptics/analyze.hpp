#pragma once

#include <sonohaptics/crossmodal.hpp>
#include <sonohaptics/engine.hpp>

#include <json.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sonohaptics {

struct CueRow {
    std::string id;
    double pitch_hz = 0.0;
    double amplitude = 0.0;
    double pan = 0.0;
    Material timbre = Material::plastic;
};

/// Pairwise absolute differences; both zero for fewer than two values.
struct GapStats {
    double min = 0.0;
    double mean = 0.0;
};

GapStats pairwise_gaps(std::span<const double> values);

/// How separable the cues of a scene (global) or of one local cluster are.
struct DistinctivenessReport {
    Mode mode = Mode::global;
    std::optional<std::string> anchor;
    double radius = 0.0;
    std::vector<CueRow> rows;
    GapStats pitch_gap;
    GapStats amplitude_gap;
    /// Local mode only: the same cluster under global cues, for comparison.
    std::optional<GapStats> global_pitch_gap;
    std::optional<GapStats> global_amplitude_gap;
};

struct AnalyzeOptions {
    Mode mode = Mode::global;
    std::optional<std::string> anchor;
    double radius = 1.0;
    bool snap_to_scale = false;
};

/// Pan is taken from the scene viewpoint. Throws EngineError for a missing
/// or unknown anchor in local mode.
DistinctivenessReport analyze(const Scene& scene, const AnalyzeOptions& options);

/// Same, reusing precomputed features (visible objects, scene order).
DistinctivenessReport analyze(std::span<const ObjectFeatures> features, const Viewpoint& view,
                              const AnalyzeOptions& options);

nlohmann::json report_to_json(const DistinctivenessReport& report);

} // namespace sonohaptics
