#include <sonohaptics/analyze.hpp>

#include <sonohaptics/error.hpp>
#include <sonohaptics/events.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace sonohaptics {

using nlohmann::json;

GapStats pairwise_gaps(std::span<const double> values)
{
    if (values.size() < 2)
        return {};
    double min_gap = std::numeric_limits<double>::infinity();
    double sum = 0.0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            const double g = std::abs(values[i] - values[j]);
            min_gap = std::min(min_gap, g);
            sum += g;
            ++pairs;
        }
    }
    return {min_gap, sum / static_cast<double>(pairs)};
}

namespace {

void fill_gaps(const std::vector<CueRow>& rows, GapStats& pitch, GapStats& amp)
{
    std::vector<double> p;
    std::vector<double> a;
    for (const CueRow& r : rows) {
        p.push_back(r.pitch_hz);
        a.push_back(r.amplitude);
    }
    pitch = pairwise_gaps(p);
    amp = pairwise_gaps(a);
}

} // namespace

DistinctivenessReport analyze(std::span<const ObjectFeatures> features, const Viewpoint& view,
                              const AnalyzeOptions& options)
{
    const HeadPose head{view.position, view.forward};
    const CueOptions cue_options{CueKind::sonohaptics, options.snap_to_scale, kDefaultCueDurationS};

    DistinctivenessReport report;
    report.mode = options.mode;
    report.radius = options.radius;

    if (options.mode != Mode::local) {
        report.mode = Mode::global;
        for (const ObjectFeatures& f : features) {
            const FeedbackCue c = global_cue(f, head, cue_options);
            report.rows.push_back({f.id, c.pitch_hz, c.amplitude, c.pan, c.timbre});
        }
        fill_gaps(report.rows, report.pitch_gap, report.amplitude_gap);
        return report;
    }

    if (!options.anchor)
        throw EngineError("local analysis needs an anchor id");
    if (!(options.radius > 0.0))
        throw EngineError("local radius must be positive");
    auto anchor = std::find_if(features.begin(), features.end(),
                               [&](const ObjectFeatures& f) { return f.id == *options.anchor; });
    if (anchor == features.end())
        throw EngineError("unknown anchor id '" + *options.anchor + "'");
    report.anchor = anchor->id;

    const std::vector<ObjectFeatures> cluster = local_cluster(features, *anchor, options.radius);
    const LocalAssignments assigned = local_assignments(cluster);

    std::vector<CueRow> global_rows;
    for (const ObjectFeatures& f : cluster) {
        const LocalAssignment& a = assigned.at(f.id);
        const double pan = pan_from_direction(head.forward, head.position, f.position);
        report.rows.push_back({f.id, a.pitch_hz, a.amplitude, pan, f.material});
        const FeedbackCue g = global_cue(f, head, cue_options);
        global_rows.push_back({f.id, g.pitch_hz, g.amplitude, g.pan, g.timbre});
    }
    fill_gaps(report.rows, report.pitch_gap, report.amplitude_gap);
    GapStats gp;
    GapStats ga;
    fill_gaps(global_rows, gp, ga);
    report.global_pitch_gap = gp;
    report.global_amplitude_gap = ga;
    return report;
}

DistinctivenessReport analyze(const Scene& scene, const AnalyzeOptions& options)
{
    const std::vector<ObjectFeatures> features = extract_features(scene);
    return analyze(features, scene.viewpoint, options);
}

json report_to_json(const DistinctivenessReport& r)
{
    auto gaps = [](const GapStats& g) { return json{{"min", g.min}, {"mean", g.mean}}; };
    json rows = json::array();
    json cluster = json::array();
    for (const CueRow& row : r.rows) {
        rows.push_back({{"id", row.id},
                        {"pitch_hz", row.pitch_hz},
                        {"amplitude", row.amplitude},
                        {"pan", row.pan},
                        {"timbre", std::string(to_string(row.timbre))}});
        cluster.push_back(row.id);
    }
    json out = {
        {"mode", std::string(to_string(r.mode))},
        {"cues", rows},
        {"pitch_gap_hz", gaps(r.pitch_gap)},
        {"amplitude_gap", gaps(r.amplitude_gap)},
    };
    if (r.mode == Mode::local) {
        out["anchor"] = r.anchor ? json(*r.anchor) : json(nullptr);
        out["radius"] = r.radius;
        out["cluster"] = cluster;
        if (r.global_pitch_gap)
            out["global_pitch_gap_hz"] = gaps(*r.global_pitch_gap);
        if (r.global_amplitude_gap)
            out["global_amplitude_gap"] = gaps(*r.global_amplitude_gap);
    }
    return out;
}

} // namespace sonohaptics
