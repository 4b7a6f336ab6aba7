#include <sonohaptics/replay.hpp>

#include <sonohaptics/error.hpp>
#include <sonohaptics/events.hpp>

#include <cmath>
#include <fstream>
#include <limits>

namespace sonohaptics {

using nlohmann::json;

std::string_view to_string(Command cmd)
{
    switch (cmd) {
    case Command::activate: return "activate";
    case Command::deactivate: return "deactivate";
    case Command::enter_local: return "enter_local";
    case Command::exit_local: return "exit_local";
    case Command::select: return "select";
    }
    return "unknown";
}

std::optional<Command> parse_command(std::string_view name)
{
    for (Command c : {Command::activate, Command::deactivate, Command::enter_local, Command::exit_local,
                      Command::select}) {
        if (to_string(c) == name)
            return c;
    }
    return std::nullopt;
}

namespace {

Vec3 vec_field(const json& j, const char* key)
{
    auto it = j.find(key);
    if (it == j.end() || !it->is_array() || it->size() != 3)
        throw ParseError(std::string("'") + key + "' must be an array of 3 numbers");
    Vec3 v;
    for (int i = 0; i < 3; ++i) {
        if (!(*it)[i].is_number())
            throw ParseError(std::string("'") + key + "' must be an array of 3 numbers");
        (i == 0 ? v.x : i == 1 ? v.y : v.z) = (*it)[i].get<double>();
    }
    return v;
}

Vec3 unit_field(const json& j, const char* key)
{
    const Vec3 v = vec_field(j, key);
    const double n = norm(v);
    if (!(n > 0.0) || !std::isfinite(n))
        throw ParseError(std::string("'") + key + "' must be a nonzero direction");
    return v / n;
}

double time_field(const json& j)
{
    auto it = j.find("t");
    if (it == j.end() || !it->is_number())
        throw ParseError("gaze sample needs a numeric 't'");
    return it->get<double>();
}

} // namespace

TraceEntry trace_entry_from_json(const json& j)
{
    if (!j.is_object())
        throw ParseError("trace record must be a JSON object");
    if (auto cmd = j.find("cmd"); cmd != j.end()) {
        if (!cmd->is_string())
            throw ParseError("'cmd' must be a string");
        auto c = parse_command(cmd->get<std::string>());
        if (!c)
            throw ParseError("unknown command '" + cmd->get<std::string>() + "'");
        CommandEntry entry{*c, std::nullopt};
        if (auto t = j.find("t"); t != j.end()) {
            if (!t->is_number())
                throw ParseError("'t' must be a number");
            entry.t = t->get<double>();
        }
        return entry;
    }
    GazeSample s;
    s.t = time_field(j);
    s.eye_origin = vec_field(j, "eye_origin");
    s.eye_dir = unit_field(j, "eye_dir");
    s.head_forward = j.contains("head_forward") ? unit_field(j, "head_forward") : s.eye_dir;
    s.head_pos = j.contains("head_pos") ? vec_field(j, "head_pos") : s.eye_origin;
    return s;
}

std::vector<TraceEntry> parse_trace(std::istream& in)
{
    std::vector<TraceEntry> entries;
    std::string line;
    std::size_t line_no = 0;
    double last_t = -std::numeric_limits<double>::infinity();
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        TraceEntry entry;
        try {
            entry = trace_entry_from_json(json::parse(line));
        } catch (const json::parse_error& e) {
            throw TraceError(line_no, std::string("malformed JSON: ") + e.what());
        } catch (const ParseError& e) {
            throw TraceError(line_no, e.what());
        }
        std::optional<double> t;
        if (const auto* g = std::get_if<GazeSample>(&entry))
            t = g->t;
        else
            t = std::get<CommandEntry>(entry).t;
        if (t) {
            if (*t < last_t)
                throw TraceError(line_no, "timestamps must be non-decreasing");
            last_t = *t;
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::vector<TraceEntry> load_trace(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open trace " + path.string());
    return parse_trace(in);
}

Events apply_entry(Engine& engine, const TraceEntry& entry, double& clock)
{
    if (const auto* g = std::get_if<GazeSample>(&entry)) {
        clock = g->t;
        return engine.step(*g);
    }
    const CommandEntry& c = std::get<CommandEntry>(entry);
    if (c.t)
        clock = *c.t;
    switch (c.command) {
    case Command::activate: return engine.activate(clock);
    case Command::deactivate: return engine.deactivate(clock);
    case Command::enter_local: return engine.enter_local(clock);
    case Command::exit_local: return engine.exit_local(clock);
    case Command::select: return engine.confirm_selection(clock);
    }
    return {};
}

ReplayResult replay(Engine& engine, const std::vector<TraceEntry>& entries)
{
    ReplayResult result;
    double clock = 0.0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        try {
            Events ev = apply_entry(engine, entries[i], clock);
            result.events.insert(result.events.end(), ev.begin(), ev.end());
        } catch (const EngineError& e) {
            result.rejected.push_back({i, e.what()});
        }
    }
    return result;
}

ReplayResult replay_file(std::shared_ptr<const Scene> scene, const std::filesystem::path& trace,
                         const std::filesystem::path& out, const EngineConfig& config)
{
    const std::vector<TraceEntry> entries = load_trace(trace);
    Engine engine(std::move(scene), config);
    ReplayResult result = replay(engine, entries);

    std::ofstream os(out, std::ios::binary | std::ios::trunc);
    if (!os)
        throw IoError("cannot create " + out.string());
    os << to_jsonl(result.events);
    if (!os)
        throw IoError("write failed: " + out.string());
    return result;
}

} // namespace sonohaptics
