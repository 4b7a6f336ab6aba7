#include <sonohaptics/scene.hpp>

#include <sonohaptics/error.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace sonohaptics {

using nlohmann::json;

std::string_view to_string(Material m)
{
    switch (m) {
    case Material::ceramic: return "ceramic";
    case Material::glass: return "glass";
    case Material::plastic: return "plastic";
    case Material::metal: return "metal";
    case Material::wood: return "wood";
    case Material::fabric: return "fabric";
    case Material::paper: return "paper";
    }
    return "unknown";
}

std::optional<Material> parse_material(std::string_view name)
{
    for (Material m : kAllMaterials) {
        if (to_string(m) == name)
            return m;
    }
    return std::nullopt;
}

const SceneObject* Scene::find(std::string_view id) const
{
    auto it = std::find_if(objects.begin(), objects.end(), [&](const SceneObject& o) { return o.id == id; });
    return it == objects.end() ? nullptr : &*it;
}

std::size_t Scene::visible_count() const
{
    return static_cast<std::size_t>(
        std::count_if(objects.begin(), objects.end(), [](const SceneObject& o) { return !o.hidden; }));
}

namespace {

Vec3 parse_vec3(const json& j, const std::string& id, const char* field)
{
    if (!j.is_array() || j.size() != 3)
        throw ValidationError(id, std::string(field) + " must be an array of 3 numbers");
    Vec3 v;
    for (int i = 0; i < 3; ++i) {
        if (!j[i].is_number())
            throw ValidationError(id, std::string(field) + " must be an array of 3 numbers");
        const double x = j[i].get<double>();
        if (!std::isfinite(x))
            throw ValidationError(id, std::string(field) + " must be finite");
        (i == 0 ? v.x : i == 1 ? v.y : v.z) = x;
    }
    return v;
}

const json& require(const json& obj, const char* key, const std::string& id)
{
    auto it = obj.find(key);
    if (it == obj.end())
        throw ValidationError(id, std::string("missing field '") + key + "'");
    return *it;
}

std::string require_string(const json& obj, const char* key, const std::string& id)
{
    const json& v = require(obj, key, id);
    if (!v.is_string())
        throw ValidationError(id, std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

ColorSource parse_color(const json& j, const std::string& id, const std::filesystem::path& base_dir)
{
    if (!j.is_object())
        throw ValidationError(id, "color must be an object");
    if (auto rgb = j.find("rgb"); rgb != j.end()) {
        if (!rgb->is_array() || rgb->size() != 3)
            throw ValidationError(id, "color.rgb must be an array of 3 integers");
        std::array<std::uint8_t, 3> c{};
        for (std::size_t i = 0; i < 3; ++i) {
            const json& ch = (*rgb)[i];
            if (!ch.is_number_integer() || ch.get<long long>() < 0 || ch.get<long long>() > 255)
                throw ValidationError(id, "color.rgb channels must be integers in [0,255]");
            c[i] = static_cast<std::uint8_t>(ch.get<int>());
        }
        return Rgb8{c[0], c[1], c[2]};
    }
    if (auto tex = j.find("texture"); tex != j.end()) {
        if (!tex->is_string() || tex->get<std::string>().empty())
            throw ValidationError(id, "color.texture must be a non-empty path");
        std::filesystem::path p = tex->get<std::string>();
        if (p.is_relative() && !base_dir.empty())
            p = base_dir / p;
        return TextureRef{p.lexically_normal()};
    }
    throw ValidationError(id, "color must contain 'rgb' or 'texture'");
}

SceneObject parse_object(const json& j, std::size_t index, const std::filesystem::path& base_dir)
{
    if (!j.is_object())
        throw ValidationError("", "objects[" + std::to_string(index) + "] must be an object");
    auto id_it = j.find("id");
    if (id_it == j.end() || !id_it->is_string() || id_it->get<std::string>().empty())
        throw ValidationError("", "objects[" + std::to_string(index) + "] needs a non-empty string id");

    SceneObject obj;
    obj.id = id_it->get<std::string>();
    obj.name = j.contains("name") ? require_string(j, "name", obj.id) : obj.id;
    obj.position = parse_vec3(require(j, "position", obj.id), obj.id, "position");

    const json& bbox = require(j, "bbox", obj.id);
    if (!bbox.is_object())
        throw ValidationError(obj.id, "bbox must be an object");
    obj.bbox.center = parse_vec3(require(bbox, "center", obj.id), obj.id, "bbox.center");
    obj.bbox.extents = parse_vec3(require(bbox, "extents", obj.id), obj.id, "bbox.extents");

    const std::string material = require_string(j, "material", obj.id);
    auto m = parse_material(material);
    if (!m)
        throw ValidationError(obj.id, "unknown material '" + material + "'");
    obj.material = *m;

    obj.color = parse_color(require(j, "color", obj.id), obj.id, base_dir);

    if (auto h = j.find("hidden"); h != j.end()) {
        if (!h->is_boolean())
            throw ValidationError(obj.id, "hidden must be a boolean");
        obj.hidden = h->get<bool>();
    }
    return obj;
}

} // namespace

void validate(const Scene& scene)
{
    std::set<std::string, std::less<>> seen;
    for (const SceneObject& obj : scene.objects) {
        if (obj.id.empty())
            throw ValidationError("", "object id must be non-empty");
        if (!seen.insert(obj.id).second)
            throw ValidationError(obj.id, "duplicate object id");
        const Vec3& e = obj.bbox.extents;
        if (!(e.x > 0.0 && e.y > 0.0 && e.z > 0.0))
            throw ValidationError(obj.id, "bbox extents must be strictly positive");
    }
    if (norm(scene.viewpoint.forward) == 0.0)
        throw ValidationError("", "viewpoint.forward must be nonzero");
}

Scene scene_from_json(const json& doc, const std::filesystem::path& base_dir)
{
    if (!doc.is_object())
        throw ParseError("scene document must be a JSON object");
    auto version = doc.find("version");
    if (version == doc.end() || !version->is_number_integer())
        throw ParseError("scene document needs an integer 'version'");
    if (version->get<int>() != kSceneSchemaVersion)
        throw ParseError("unsupported scene version " + std::to_string(version->get<int>()));

    Scene scene;
    if (auto n = doc.find("name"); n != doc.end()) {
        if (!n->is_string())
            throw ParseError("scene name must be a string");
        scene.name = n->get<std::string>();
    }
    if (auto vp = doc.find("viewpoint"); vp != doc.end()) {
        if (!vp->is_object())
            throw ParseError("viewpoint must be an object");
        if (vp->contains("position"))
            scene.viewpoint.position = parse_vec3(vp->at("position"), "", "viewpoint.position");
        if (vp->contains("forward"))
            scene.viewpoint.forward = parse_vec3(vp->at("forward"), "", "viewpoint.forward");
    }

    auto objects = doc.find("objects");
    if (objects == doc.end() || !objects->is_array())
        throw ParseError("scene document needs an 'objects' array");
    scene.objects.reserve(objects->size());
    for (std::size_t i = 0; i < objects->size(); ++i)
        scene.objects.push_back(parse_object((*objects)[i], i, base_dir));

    validate(scene);
    if (norm(scene.viewpoint.forward) > 0.0)
        scene.viewpoint.forward = normalized(scene.viewpoint.forward);
    return scene;
}

Scene load_scene(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open scene file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();

    json doc;
    try {
        doc = json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    return scene_from_json(doc, path.parent_path());
}

json scene_to_json(const Scene& scene)
{
    auto vec = [](const Vec3& v) { return json::array({v.x, v.y, v.z}); };
    json objects = json::array();
    for (const SceneObject& o : scene.objects) {
        json color;
        if (const auto* rgb = std::get_if<Rgb8>(&o.color))
            color["rgb"] = json::array({rgb->r, rgb->g, rgb->b});
        else
            color["texture"] = std::get<TextureRef>(o.color).path.string();
        objects.push_back({
            {"id", o.id},
            {"name", o.name},
            {"position", vec(o.position)},
            {"bbox", {{"center", vec(o.bbox.center)}, {"extents", vec(o.bbox.extents)}}},
            {"material", std::string(to_string(o.material))},
            {"color", color},
            {"hidden", o.hidden},
        });
    }
    return {
        {"version", kSceneSchemaVersion},
        {"name", scene.name},
        {"viewpoint", {{"position", vec(scene.viewpoint.position)}, {"forward", vec(scene.viewpoint.forward)}}},
        {"objects", objects},
    };
}

FaceDims face_dims(const SceneObject& obj)
{
    std::array<double, 3> e{obj.bbox.extents.x, obj.bbox.extents.y, obj.bbox.extents.z};
    std::sort(e.begin(), e.end(), std::greater<>());
    return {e[0], e[1]};
}

SizeNormalizationParams scene_stats(const Scene& scene)
{
    bool any = false;
    SizeNormalizationParams p;
    for (const SceneObject& obj : scene.objects) {
        if (obj.hidden)
            continue;
        const FaceDims d = face_dims(obj);
        if (!any) {
            p = {d.width, d.width, d.height, d.height};
            any = true;
            continue;
        }
        p.min_w = std::min(p.min_w, d.width);
        p.max_w = std::max(p.max_w, d.width);
        p.min_h = std::min(p.min_h, d.height);
        p.max_h = std::max(p.max_h, d.height);
    }
    if (!any)
        throw EmptySceneError();
    return p;
}

} // namespace sonohaptics
