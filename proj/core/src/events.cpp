#include <sonohaptics/events.hpp>

#include <sonohaptics/error.hpp>

namespace sonohaptics {

using nlohmann::json;

json cue_to_json(const FeedbackCue& cue)
{
    return {
        {"kind", std::string(to_string(cue.kind))},
        {"pitch_hz", cue.pitch_hz},
        {"amplitude", cue.amplitude},
        {"pan", cue.pan},
        {"timbre", std::string(to_string(cue.timbre))},
        {"duration_s", cue.duration_s},
    };
}

FeedbackCue cue_from_json(const json& j)
{
    try {
        FeedbackCue cue;
        auto kind = parse_cue_kind(j.at("kind").get<std::string>());
        auto timbre = parse_material(j.at("timbre").get<std::string>());
        if (!kind || !timbre)
            throw ParseError("cue has an unknown kind or timbre");
        cue.kind = *kind;
        cue.timbre = *timbre;
        cue.pitch_hz = j.at("pitch_hz").get<double>();
        cue.amplitude = j.at("amplitude").get<double>();
        cue.pan = j.at("pan").get<double>();
        cue.duration_s = j.at("duration_s").get<double>();
        return cue;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed cue: ") + e.what());
    }
}

json assignments_to_json(const LocalAssignments& assignments)
{
    json out = json::object();
    for (const auto& [id, a] : assignments)
        out[id] = {{"pitch_hz", a.pitch_hz}, {"amplitude", a.amplitude}};
    return out;
}

namespace {

struct PayloadJson {
    json& out;

    void operator()(const event::HoverEnter& e) const
    {
        out["type"] = "hover_enter";
        out["object"] = e.object;
        out["cue"] = cue_to_json(e.cue);
    }
    void operator()(const event::HoverExit& e) const
    {
        out["type"] = "hover_exit";
        out["object"] = e.object;
    }
    void operator()(const event::ModeChanged& e) const
    {
        out["type"] = "mode_changed";
        out["mode"] = std::string(to_string(e.mode));
        if (e.local) {
            out["anchor"] = e.local->anchor;
            out["assignments"] = assignments_to_json(e.local->assignments);
        }
    }
    void operator()(const event::SelectionConfirmed& e) const
    {
        out["type"] = "selection_confirmed";
        out["object"] = e.object ? json(*e.object) : json(nullptr);
    }
    void operator()(const event::Activated&) const { out["type"] = "activated"; }
    void operator()(const event::Deactivated&) const { out["type"] = "deactivated"; }
};

} // namespace

json event_to_json(const EngineEvent& event)
{
    json out = json::object();
    out["t"] = event.t;
    std::visit(PayloadJson{out}, event.payload);
    return out;
}

std::string to_jsonl(std::span<const EngineEvent> events)
{
    std::string out;
    for (const EngineEvent& e : events) {
        out += event_to_json(e).dump();
        out += '\n';
    }
    return out;
}

} // namespace sonohaptics
