#pragma once

#include <sonohaptics/engine.hpp>

#include <json.hpp>

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace sonohaptics {

enum class Command { activate, deactivate, enter_local, exit_local, select };

std::string_view to_string(Command cmd);
std::optional<Command> parse_command(std::string_view name);

struct CommandEntry {
    Command command = Command::activate;
    std::optional<double> t; // defaults to the latest timestamp seen
};

using TraceEntry = std::variant<GazeSample, CommandEntry>;

/// Parses one trace record. Gaze directions are renormalized; a zero
/// direction is rejected. Missing head fields default to the eye pose.
/// Throws ParseError.
TraceEntry trace_entry_from_json(const nlohmann::json& j);

/// JSON Lines gaze trace; blank lines are skipped and timestamps must be
/// non-decreasing. Throws TraceError with the 1-based line number.
std::vector<TraceEntry> parse_trace(std::istream& in);
std::vector<TraceEntry> load_trace(const std::filesystem::path& path);

/// A command the engine refused (e.g. enter_local before any hover).
struct RejectedCommand {
    std::size_t index = 0; // entry index, 0-based
    std::string message;
};

struct ReplayResult {
    Events events;
    std::vector<RejectedCommand> rejected;
};

/// Applies one entry, tracking the clock used for commands without a timestamp.
Events apply_entry(Engine& engine, const TraceEntry& entry, double& clock);

/// Feeds the entries through `engine` in order.
ReplayResult replay(Engine& engine, const std::vector<TraceEntry>& entries);

/// Fresh engine over `scene`; writes the event log to `out`.
ReplayResult replay_file(std::shared_ptr<const Scene> scene, const std::filesystem::path& trace,
                         const std::filesystem::path& out, const EngineConfig& config = {});

} // namespace sonohaptics
