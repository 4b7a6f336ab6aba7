#pragma once

#include <sonohaptics/geometry.hpp>

#include <json.hpp>

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sonohaptics {

enum class Material { ceramic, glass, plastic, metal, wood, fabric, paper };

inline constexpr std::array<Material, 7> kAllMaterials = {
    Material::ceramic, Material::glass, Material::plastic, Material::metal,
    Material::wood,    Material::fabric, Material::paper,
};

std::string_view to_string(Material m);
std::optional<Material> parse_material(std::string_view name);

struct Rgb8 {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    constexpr bool operator==(const Rgb8&) const = default;
};

/// Texture image reference. Relative paths are resolved against the scene
/// file's directory at load time, so `path` is absolute after load_scene.
static_assert(sizeof(Rgb8) == 3, "Rgb8 must be tightly packed for image buffers");

struct TextureRef {
    std::filesystem::path path;

    bool operator==(const TextureRef&) const = default;
};

using ColorSource = std::variant<Rgb8, TextureRef>;

struct SceneObject {
    std::string id;
    std::string name;
    Vec3 position;
    Aabb bbox;
    Material material = Material::plastic;
    ColorSource color = Rgb8{};
    bool hidden = false;
};

/// Default observer pose used for pan in offline analysis and the simulator.
struct Viewpoint {
    Vec3 position{0.0, 1.2, 0.0};
    Vec3 forward{0.0, 0.0, 1.0};
};

struct Scene {
    std::string name;
    std::vector<SceneObject> objects;
    Viewpoint viewpoint;

    const SceneObject* find(std::string_view id) const;
    std::size_t visible_count() const;
};

inline constexpr int kSceneSchemaVersion = 1;

/// Reads and validates a scene file. Throws ParseError or ValidationError.
Scene load_scene(const std::filesystem::path& path);

/// Validates a parsed scene document; `base_dir` resolves relative texture paths.
Scene scene_from_json(const nlohmann::json& doc, const std::filesystem::path& base_dir = {});

nlohmann::json scene_to_json(const Scene& scene);

/// Checks every Scene/SceneObject invariant; throws ValidationError.
void validate(const Scene& scene);

/// Per-scene extrema of the (width, height) face dimensions of visible objects.
struct SizeNormalizationParams {
    double min_w = 0.0;
    double max_w = 0.0;
    double min_h = 0.0;
    double max_h = 0.0;
};

/// Width and height of an object's bbox: the largest and second-largest extents.
struct FaceDims {
    double width = 0.0;
    double height = 0.0;
};

FaceDims face_dims(const SceneObject& obj);

/// Throws EmptySceneError when no object is visible.
SizeNormalizationParams scene_stats(const Scene& scene);

} // namespace sonohaptics
