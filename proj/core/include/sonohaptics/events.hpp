#pragma once

#include <sonohaptics/engine.hpp>

#include <json.hpp>

#include <span>
#include <string>

namespace sonohaptics {

nlohmann::json cue_to_json(const FeedbackCue& cue);

/// Inverse of cue_to_json. Throws ParseError.
FeedbackCue cue_from_json(const nlohmann::json& j);

nlohmann::json assignments_to_json(const LocalAssignments& assignments);

/// Event log record: {"t":..,"type":"hover_enter"|"hover_exit"|"mode_changed"|
/// "selection_confirmed"|"activated"|"deactivated", ...payload}.
nlohmann::json event_to_json(const EngineEvent& event);

/// One compact JSON object per line. Object keys are emitted in sorted order,
/// so the output is a deterministic function of the events.
std::string to_jsonl(std::span<const EngineEvent> events);

} // namespace sonohaptics
