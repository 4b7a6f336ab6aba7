#pragma once

#include <sonohaptics/engine.hpp>
#include <sonohaptics/timbre.hpp>

#include <json.hpp>

#include <memory>
#include <string_view>
#include <vector>

namespace sonohaptics {

/// Wire form of an engine event. Server -> client message types:
///   hover       {"type":"hover","t","object","cue":{...}}
///   hover_exit  {"type":"hover_exit","t","object"}
///   mode        {"type":"mode","t","mode":"idle"|"global"|"local",
///                ["event":"activated"|"deactivated"], ["anchor","assignments"]}
///   selection   {"type":"selection","t","object":id|null}
nlohmann::json to_wire(const EngineEvent& event);

nlohmann::json error_message(std::string_view msg);

/// One client session: parses newline-delimited client messages, drives a
/// private engine and returns the messages to push back. Client -> server
/// types: hello, gaze, activate, deactivate, enter_local, exit_local, select.
/// Malformed input yields an `error` reply; the session stays usable.
class Session {
public:
    Session(std::shared_ptr<const Scene> scene, EngineConfig config, std::shared_ptr<const TimbreTable> timbres);

    std::vector<nlohmann::json> handle_line(std::string_view line);
    std::vector<nlohmann::json> handle(const nlohmann::json& message);

    /// {"type":"scene","scene":{...},"timbres":{...},"lightness":{id:L},"config":{...}}
    nlohmann::json scene_message() const;

    const Engine& engine() const { return engine_; }

private:
    std::shared_ptr<const TimbreTable> timbres_;
    Engine engine_;
    double clock_ = 0.0;
};

} // namespace sonohaptics
