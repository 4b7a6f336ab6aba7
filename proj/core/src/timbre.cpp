#include <sonohaptics/timbre.hpp>

#include <sonohaptics/error.hpp>

#include <fstream>
#include <sstream>

namespace sonohaptics {

using nlohmann::json;

namespace {

TimbrePreset builtin(Material m)
{
    switch (m) {
    case Material::metal:
        return {m, 880.0, {{1.0, 1.0, 1.2}, {2.76, 0.6, 0.9}, {5.40, 0.35, 0.6}}, 0.0, 0.05, 0.0};
    case Material::glass:
        return {m, 1320.0, {{1.0, 1.0, 0.6}, {2.32, 0.55, 0.45}, {4.25, 0.3, 0.3}}, 0.0, 0.05, 0.0};
    case Material::ceramic:
        return {m, 1000.0, {{1.0, 1.0, 0.35}, {2.5, 0.5, 0.25}, {4.1, 0.25, 0.15}}, 0.0, 0.05, 0.0};
    case Material::wood:
        return {m, 440.0, {{1.0, 1.0, 0.12}, {2.1, 0.45, 0.08}, {3.0, 0.2, 0.05}}, 0.0, 0.05, 0.0};
    case Material::plastic:
        return {m, 600.0, {{1.0, 1.0, 0.10}, {1.9, 0.4, 0.07}, {2.8, 0.2, 0.05}}, 0.0, 0.05, 0.0};
    case Material::paper:
        return {m, 2000.0, {{1.0, 0.4, 0.05}}, 0.8, 0.05, 0.0};
    case Material::fabric:
        return {m, 300.0, {{1.0, 0.2, 0.08}}, 0.95, 0.08, 800.0};
    }
    return {};
}

ImpactMode parse_mode(const json& j, const std::string& tag)
{
    if (!j.is_object())
        throw ParseError(tag + ": mode must be an object");
    ImpactMode mode;
    mode.ratio = j.value("ratio", 1.0);
    mode.gain = j.value("gain", 1.0);
    mode.decay_s = j.value("decay_s", 0.1);
    return mode;
}

} // namespace

void validate(const TimbrePreset& p)
{
    const std::string tag(to_string(p.material));
    if (p.modes.empty())
        throw ValidationError(tag, "timbre preset needs at least one mode");
    if (!(p.base_hz > 0.0))
        throw ValidationError(tag, "timbre base_hz must be positive");
    for (const ImpactMode& m : p.modes) {
        if (!(m.ratio > 0.0))
            throw ValidationError(tag, "mode ratio must be positive");
        if (!(m.gain > 0.0 && m.gain <= 1.0))
            throw ValidationError(tag, "mode gain must be in (0, 1]");
        if (!(m.decay_s > 0.0))
            throw ValidationError(tag, "mode decay must be positive");
    }
    if (!(p.noise_mix >= 0.0 && p.noise_mix <= 1.0))
        throw ValidationError(tag, "noise_mix must be in [0, 1]");
    if (!(p.noise_decay_s > 0.0))
        throw ValidationError(tag, "noise_decay_s must be positive");
}

TimbreTable::TimbreTable()
{
    for (Material m : kAllMaterials)
        presets_[static_cast<std::size_t>(m)] = builtin(m);
}

void TimbreTable::set(const TimbrePreset& preset)
{
    validate(preset);
    presets_[static_cast<std::size_t>(preset.material)] = preset;
}

TimbreTable TimbreTable::from_json(const json& doc)
{
    if (!doc.is_object())
        throw ParseError("timbre config must be an object keyed by material");
    TimbreTable table;
    for (const auto& [key, value] : doc.items()) {
        auto m = parse_material(key);
        if (!m)
            throw ValidationError(key, "unknown material '" + key + "'");
        if (!value.is_object())
            throw ParseError(key + ": preset must be an object");
        TimbrePreset p = table.at(*m);
        try {
            p.base_hz = value.value("base_hz", p.base_hz);
            if (auto modes = value.find("modes"); modes != value.end()) {
                if (!modes->is_array())
                    throw ParseError(key + ": modes must be an array");
                p.modes.clear();
                for (const json& mj : *modes)
                    p.modes.push_back(parse_mode(mj, key));
            }
            p.noise_mix = value.value("noise_mix", p.noise_mix);
            p.noise_decay_s = value.value("noise_decay_s", p.noise_decay_s);
            p.noise_lowpass_hz = value.value("noise_lowpass_hz", p.noise_lowpass_hz);
        } catch (const json::type_error& e) {
            throw ParseError(key + ": " + e.what());
        }
        table.set(p);
    }
    return table;
}

TimbreTable TimbreTable::load(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open timbre config " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return from_json(json::parse(buf.str()));
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

json preset_to_json(const TimbrePreset& p)
{
    json modes = json::array();
    for (const ImpactMode& m : p.modes)
        modes.push_back({{"ratio", m.ratio}, {"gain", m.gain}, {"decay_s", m.decay_s}});
    return {
        {"material", std::string(to_string(p.material))},
        {"base_hz", p.base_hz},
        {"modes", modes},
        {"noise_mix", p.noise_mix},
        {"noise_decay_s", p.noise_decay_s},
        {"noise_lowpass_hz", p.noise_lowpass_hz},
    };
}

json TimbreTable::to_json() const
{
    json out = json::object();
    for (Material m : kAllMaterials)
        out[std::string(to_string(m))] = preset_to_json(at(m));
    return out;
}

const TimbreTable& default_timbres()
{
    static const TimbreTable table;
    return table;
}

const TimbrePreset& timbre_for_material(Material m)
{
    return default_timbres().at(m);
}

} // namespace sonohaptics
