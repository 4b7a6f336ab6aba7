#pragma once

#include <sonohaptics/scene.hpp>

#include <json.hpp>

#include <array>
#include <filesystem>
#include <vector>

namespace sonohaptics {

/// One exponentially decaying partial of an impact.
struct ImpactMode {
    double ratio = 1.0;   // frequency relative to base_hz
    double gain = 1.0;    // (0, 1]
    double decay_s = 0.1; // e-folding time

    bool operator==(const ImpactMode&) const = default;
};

/// Parametric modal impact for one material. Noise-based materials (paper,
/// fabric) mix in seeded noise; `noise_lowpass_hz` <= 0 leaves it white.
struct TimbrePreset {
    Material material = Material::plastic;
    double base_hz = 440.0;
    std::vector<ImpactMode> modes;
    double noise_mix = 0.0;       // [0, 1]
    double noise_decay_s = 0.05;
    double noise_lowpass_hz = 0.0;

    bool operator==(const TimbrePreset&) const = default;
};

/// Throws ValidationError when a preset invariant is violated.
void validate(const TimbrePreset& preset);

class TimbreTable {
public:
    /// Built-in presets for all seven materials.
    TimbreTable();

    const TimbrePreset& at(Material m) const { return presets_[static_cast<std::size_t>(m)]; }

    /// Replaces the preset for its material after validation.
    void set(const TimbrePreset& preset);

    /// Overrides presets listed in a JSON config; materials not listed keep
    /// their current preset. Throws ParseError / ValidationError.
    static TimbreTable from_json(const nlohmann::json& doc);
    static TimbreTable load(const std::filesystem::path& path);
    nlohmann::json to_json() const;

private:
    std::array<TimbrePreset, kAllMaterials.size()> presets_;
};

const TimbreTable& default_timbres();

/// Preset from the built-in table.
const TimbrePreset& timbre_for_material(Material m);

nlohmann::json preset_to_json(const TimbrePreset& preset);

} // namespace sonohaptics
