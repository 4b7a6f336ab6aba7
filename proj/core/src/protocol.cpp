#include <sonohaptics/protocol.hpp>

#include <sonohaptics/error.hpp>
#include <sonohaptics/events.hpp>
#include <sonohaptics/replay.hpp>

namespace sonohaptics {

using nlohmann::json;

namespace {

struct WireJson {
    json& out;

    void operator()(const event::HoverEnter& e) const
    {
        out["type"] = "hover";
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
        out["type"] = "mode";
        out["mode"] = std::string(to_string(e.mode));
        if (e.local) {
            out["anchor"] = e.local->anchor;
            out["assignments"] = assignments_to_json(e.local->assignments);
        }
    }
    void operator()(const event::SelectionConfirmed& e) const
    {
        out["type"] = "selection";
        out["object"] = e.object ? json(*e.object) : json(nullptr);
    }
    void operator()(const event::Activated&) const
    {
        out["type"] = "mode";
        out["mode"] = "global";
        out["event"] = "activated";
    }
    void operator()(const event::Deactivated&) const
    {
        out["type"] = "mode";
        out["mode"] = "idle";
        out["event"] = "deactivated";
    }
};

// Wire gaze fields map onto the trace record layout.
json gaze_as_trace(const json& m)
{
    json g = json::object();
    for (const auto& [wire, trace] : {std::pair{"t", "t"}, std::pair{"origin", "eye_origin"},
                                      std::pair{"dir", "eye_dir"}, std::pair{"head_forward", "head_forward"},
                                      std::pair{"head_pos", "head_pos"}}) {
        if (auto it = m.find(wire); it != m.end())
            g[trace] = *it;
    }
    if (!g.contains("head_pos") && g.contains("eye_origin"))
        g["head_pos"] = g["eye_origin"];
    if (!g.contains("head_forward") && g.contains("eye_dir"))
        g["head_forward"] = g["eye_dir"];
    return g;
}

} // namespace

json to_wire(const EngineEvent& event)
{
    json out = json::object();
    out["t"] = event.t;
    std::visit(WireJson{out}, event.payload);
    return out;
}

json error_message(std::string_view msg)
{
    return {{"type", "error"}, {"msg", std::string(msg)}};
}

Session::Session(std::shared_ptr<const Scene> scene, EngineConfig config, std::shared_ptr<const TimbreTable> timbres)
    : timbres_(timbres ? std::move(timbres) : std::make_shared<const TimbreTable>()),
      engine_(std::move(scene), config)
{
}

json Session::scene_message() const
{
    json lightness = json::object();
    for (const SceneObject& obj : engine_.scene().objects) {
        if (const ObjectFeatures* f = engine_.features(obj.id))
            lightness[obj.id] = f->lightness;
    }
    const EngineConfig& c = engine_.config();
    return {
        {"type", "scene"},
        {"scene", scene_to_json(engine_.scene())},
        {"timbres", timbres_->to_json()},
        {"lightness", lightness},
        {"config",
         {{"cast_radius", c.cast_radius},
          {"local_radius", c.local_radius},
          {"cue_kind", std::string(to_string(c.cue_kind))},
          {"snap_to_scale", c.snap_to_scale},
          {"cue_duration_s", c.cue_duration_s}}},
    };
}

std::vector<json> Session::handle_line(std::string_view line)
{
    json message;
    try {
        message = json::parse(line);
    } catch (const json::parse_error& e) {
        return {error_message(std::string("malformed JSON: ") + e.what())};
    }
    return handle(message);
}

std::vector<json> Session::handle(const json& message)
{
    if (!message.is_object() || !message.contains("type") || !message["type"].is_string())
        return {error_message("message needs a string 'type'")};
    const std::string type = message["type"].get<std::string>();

    try {
        if (type == "hello") {
            CueKind kind = engine_.config().cue_kind;
            bool snap = engine_.config().snap_to_scale;
            if (auto k = message.find("cue_kind"); k != message.end()) {
                auto parsed = k->is_string() ? parse_cue_kind(k->get<std::string>()) : std::nullopt;
                if (!parsed)
                    return {error_message("unknown cue_kind")};
                kind = *parsed;
            }
            if (auto s = message.find("snap_to_scale"); s != message.end()) {
                if (!s->is_boolean())
                    return {error_message("snap_to_scale must be a boolean")};
                snap = s->get<bool>();
            }
            engine_.set_cue_options(kind, snap);
            return {scene_message()};
        }

        TraceEntry entry;
        if (type == "gaze") {
            entry = trace_entry_from_json(gaze_as_trace(message));
        } else if (auto cmd = parse_command(type)) {
            CommandEntry c{*cmd, std::nullopt};
            if (auto t = message.find("t"); t != message.end() && t->is_number())
                c.t = t->get<double>();
            entry = c;
        } else {
            return {error_message("unknown message type '" + type + "'")};
        }

        std::vector<json> out;
        for (const EngineEvent& e : apply_entry(engine_, entry, clock_))
            out.push_back(to_wire(e));
        return out;
    } catch (const Error& e) {
        return {error_message(e.what())};
    }
}

} // namespace sonohaptics
