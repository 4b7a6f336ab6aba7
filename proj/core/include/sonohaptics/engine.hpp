#pragma once

#include <sonohaptics/crossmodal.hpp>
#include <sonohaptics/scene.hpp>
#include <sonohaptics/sphere_cast.hpp>

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace sonohaptics {

struct GazeSample {
    double t = 0.0;
    Vec3 eye_origin;
    Vec3 eye_dir{0.0, 0.0, 1.0};
    Vec3 head_forward{0.0, 0.0, 1.0};
    Vec3 head_pos;
};

/// Throws EngineError unless both directions are unit-norm within 1e-6.
void validate(const GazeSample& sample);

struct EngineConfig {
    double cast_radius = kDefaultCastRadius;
    double local_radius = 1.0;
    CueKind cue_kind = CueKind::sonohaptics;
    bool snap_to_scale = false;
    double cue_duration_s = kDefaultCueDurationS;
};

void validate(const EngineConfig& config);

enum class Mode { idle, global, local };

std::string_view to_string(Mode mode);

/// Cluster frozen when local mode is entered.
struct LocalCluster {
    std::string anchor;
    LocalAssignments assignments;

    bool operator==(const LocalCluster&) const = default;
};

namespace event {

struct HoverEnter {
    std::string object;
    FeedbackCue cue;
};

struct HoverExit {
    std::string object;
};

struct ModeChanged {
    Mode mode = Mode::global;
    std::optional<LocalCluster> local; // set iff mode == local
};

struct SelectionConfirmed {
    std::optional<std::string> object;
};

struct Activated {};
struct Deactivated {};

} // namespace event

using EventPayload = std::variant<event::HoverEnter, event::HoverExit, event::ModeChanged, event::SelectionConfirmed,
                                  event::Activated, event::Deactivated>;

struct EngineEvent {
    double t = 0.0;
    EventPayload payload;
};

using Events = std::vector<EngineEvent>;

/// Single-owner selection state machine. Every mutation goes through one of
/// the command methods or step(); callers sharing an engine must serialize.
class Engine {
public:
    /// Resolves object features up front; throws TextureError or EmptySceneError.
    explicit Engine(std::shared_ptr<const Scene> scene, EngineConfig config = {});
    explicit Engine(Scene scene, EngineConfig config = {});

    Events activate(double t);
    Events deactivate(double t);

    /// Freezes assignments for the cluster around the last-gazed object.
    /// Throws EngineError when inactive or when nothing has been gazed at.
    Events enter_local(double t);
    Events exit_local(double t);

    /// Edge-triggered: emits only when the resolved target changes. Samples
    /// while idle are ignored.
    Events step(const GazeSample& sample);

    Events confirm_selection(double t);

    /// Changes cue rendering options; frozen local assignments are kept.
    void set_cue_options(CueKind kind, bool snap_to_scale);

    Mode mode() const { return mode_; }
    bool active() const { return mode_ != Mode::idle; }
    const std::optional<std::string>& hovered() const { return hovered_; }
    const std::optional<std::string>& last_gazed() const { return last_gazed_; }
    const std::optional<LocalCluster>& local_cluster() const { return local_; }
    const EngineConfig& config() const { return config_; }
    const Scene& scene() const { return *scene_; }
    const SizeNormalizationParams& normalization() const { return params_; }

    /// Features of a visible object; nullptr for hidden or unknown ids.
    const ObjectFeatures* features(std::string_view id) const;

    /// Cue the engine would emit for `object_index` under the given head pose.
    FeedbackCue cue_for(std::size_t object_index, const HeadPose& head) const;

private:
    std::shared_ptr<const Scene> scene_;
    EngineConfig config_;
    SizeNormalizationParams params_;
    std::vector<std::optional<ObjectFeatures>> features_; // by scene index

    Mode mode_ = Mode::idle;
    std::optional<std::string> hovered_;
    std::optional<std::string> last_gazed_;
    std::optional<LocalCluster> local_;
};

} // namespace sonohaptics
