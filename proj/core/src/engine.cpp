#include <sonohaptics/engine.hpp>

#include <sonohaptics/error.hpp>

#include <cmath>

namespace sonohaptics {

namespace {

bool unit_norm(const Vec3& v)
{
    return std::abs(norm(v) - 1.0) <= 1e-6;
}

} // namespace

void validate(const GazeSample& s)
{
    if (!unit_norm(s.eye_dir))
        throw EngineError("gaze eye_dir must be unit-norm");
    if (!unit_norm(s.head_forward))
        throw EngineError("gaze head_forward must be unit-norm");
}

void validate(const EngineConfig& c)
{
    if (!(c.cast_radius > 0.0))
        throw EngineError("cast radius must be positive");
    if (!(c.local_radius > 0.0))
        throw EngineError("local radius must be positive");
    if (!(c.cue_duration_s > 0.0))
        throw EngineError("cue duration must be positive");
}

std::string_view to_string(Mode mode)
{
    switch (mode) {
    case Mode::idle: return "idle";
    case Mode::global: return "global";
    case Mode::local: return "local";
    }
    return "unknown";
}

Engine::Engine(std::shared_ptr<const Scene> scene, EngineConfig config)
    : scene_(std::move(scene)), config_(config)
{
    if (!scene_)
        throw EngineError("engine needs a scene");
    validate(config_);
    params_ = scene_stats(*scene_);
    features_.resize(scene_->objects.size());
    for (std::size_t i = 0; i < scene_->objects.size(); ++i) {
        const SceneObject& obj = scene_->objects[i];
        if (!obj.hidden)
            features_[i] = extract_features(obj, params_);
    }
}

Engine::Engine(Scene scene, EngineConfig config)
    : Engine(std::make_shared<const Scene>(std::move(scene)), config)
{
}

const ObjectFeatures* Engine::features(std::string_view id) const
{
    for (const auto& f : features_) {
        if (f && f->id == id)
            return &*f;
    }
    return nullptr;
}

void Engine::set_cue_options(CueKind kind, bool snap_to_scale)
{
    config_.cue_kind = kind;
    config_.snap_to_scale = snap_to_scale;
}

Events Engine::activate(double t)
{
    if (mode_ != Mode::idle)
        return {};
    mode_ = Mode::global;
    return {{t, event::Activated{}}};
}

Events Engine::deactivate(double t)
{
    if (mode_ == Mode::idle)
        return {};
    mode_ = Mode::idle;
    hovered_.reset();
    last_gazed_.reset();
    local_.reset();
    return {{t, event::Deactivated{}}};
}

Events Engine::enter_local(double t)
{
    if (mode_ == Mode::idle)
        throw EngineError("enter_local requires an active session");
    if (mode_ == Mode::local)
        return {};
    if (!last_gazed_)
        throw EngineError("enter_local: no object has been gazed at yet");

    const ObjectFeatures* anchor = features(*last_gazed_);
    if (!anchor)
        throw EngineError("enter_local: anchor '" + *last_gazed_ + "' is not visible");

    std::vector<ObjectFeatures> visible;
    for (const auto& f : features_) {
        if (f)
            visible.push_back(*f);
    }
    const std::vector<ObjectFeatures> cluster = sonohaptics::local_cluster(visible, *anchor, config_.local_radius);

    local_ = LocalCluster{anchor->id, local_assignments(cluster)};
    mode_ = Mode::local;
    return {{t, event::ModeChanged{Mode::local, local_}}};
}

Events Engine::exit_local(double t)
{
    if (mode_ != Mode::local)
        return {};
    mode_ = Mode::global;
    local_.reset();
    return {{t, event::ModeChanged{Mode::global, std::nullopt}}};
}

FeedbackCue Engine::cue_for(std::size_t index, const HeadPose& head) const
{
    const auto& f = features_.at(index);
    if (!f)
        throw EngineError("object '" + scene_->objects.at(index).id + "' is hidden");

    const CueOptions options{config_.cue_kind, config_.snap_to_scale, config_.cue_duration_s};
    if (mode_ != Mode::local)
        return global_cue(*f, head, options);

    auto it = local_->assignments.find(f->id);
    if (it == local_->assignments.end() || config_.cue_kind == CueKind::silent)
        return silent_cue(f->material, config_.cue_duration_s);

    const double pan = pan_from_direction(head.forward, head.position, f->position);
    if (config_.cue_kind == CueKind::static_tone)
        return static_cue(f->material, pan);
    return {CueKind::sonohaptics, it->second.pitch_hz, it->second.amplitude, pan, f->material,
            config_.cue_duration_s};
}

Events Engine::step(const GazeSample& sample)
{
    if (mode_ == Mode::idle)
        return {};

    const auto hit = sphere_cast(*scene_, sample.eye_origin, sample.eye_dir, config_.cast_radius);
    std::optional<std::string> target;
    if (hit)
        target = scene_->objects[hit->index].id;
    if (target == hovered_)
        return {};

    Events events;
    if (hovered_)
        events.push_back({sample.t, event::HoverExit{*hovered_}});
    hovered_ = target;
    if (target) {
        last_gazed_ = target;
        const HeadPose head{sample.head_pos, sample.head_forward};
        events.push_back({sample.t, event::HoverEnter{*target, cue_for(hit->index, head)}});
    }
    return events;
}

Events Engine::confirm_selection(double t)
{
    if (mode_ == Mode::idle)
        return {};
    return {{t, event::SelectionConfirmed{hovered_}}};
}

} // namespace sonohaptics
