#pragma once

// Shared fixtures and independent oracles for the test suites. Nothing here
// calls into the code paths it is used to check.

#include <sonohaptics/scene.hpp>

#include <fftw3.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace test {

namespace fs = std::filesystem;
using namespace sonohaptics;

inline fs::path fixtures_dir()
{
    return SONOHAPTICS_FIXTURES_DIR;
}

inline fs::path data_dir()
{
    return SONOHAPTICS_TEST_DATA_DIR;
}

inline fs::path scene_path(int n)
{
    return fixtures_dir() / "scenes" / ("living-room-" + std::to_string(n) + ".json");
}

/// Scratch directory removed on destruction.
class TempDir {
public:
    TempDir()
    {
        std::random_device rd;
        path_ = fs::temp_directory_path() / ("sonohaptics-test-" + std::to_string(rd()) + std::to_string(rd()));
        fs::create_directories(path_);
    }
    ~TempDir()
    {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const fs::path& path() const { return path_; }
    fs::path operator/(const std::string& name) const { return path_ / name; }

private:
    fs::path path_;
};

inline void write_text(const fs::path& p, const std::string& text)
{
    std::ofstream out(p, std::ios::binary);
    out << text;
}

inline std::string read_text(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline SceneObject make_object(std::string id, Vec3 pos, Vec3 extents, Rgb8 rgb = {128, 128, 128},
                               Material m = Material::wood)
{
    SceneObject obj;
    obj.name = id;
    obj.id = std::move(id);
    obj.position = pos;
    obj.bbox = {pos, extents};
    obj.material = m;
    obj.color = rgb;
    return obj;
}

/// Random clutter: positions in a 6 m cube in front of the origin, extents
/// 0.05..1.5 m, grays of random lightness.
inline Scene random_scene(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_real_distribution<double> pos(-3.0, 3.0);
    std::uniform_real_distribution<double> ext(0.05, 1.5);
    std::uniform_int_distribution<int> gray(0, 255);
    std::uniform_int_distribution<int> mat(0, 6);
    Scene scene;
    scene.name = "random";
    for (std::size_t i = 0; i < n; ++i) {
        const auto g = static_cast<std::uint8_t>(gray(rng));
        scene.objects.push_back(make_object("obj" + std::to_string(i), {pos(rng), pos(rng), pos(rng) + 4.0},
                                            {ext(rng), ext(rng), ext(rng)}, {g, g, g},
                                            static_cast<Material>(mat(rng))));
    }
    return scene;
}

// ---------------------------------------------------------------------------
// Swept-sphere oracle: the distance from a point on the ray to the box is a
// convex function of t, so golden-section search finds its minimum and
// bisection finds the first t where it drops to the radius.

inline double point_box_distance(const Vec3& p, const Aabb& box)
{
    double s = 0.0;
    for (int k = 0; k < 3; ++k) {
        const double d = std::max(std::abs(p[k] - box.center[k]) - 0.5 * box.extents[k], 0.0);
        s += d * d;
    }
    return std::sqrt(s);
}

inline std::optional<double> oracle_entry(const Aabb& box, const Vec3& o, const Vec3& d, double r)
{
    auto f = [&](double t) { return point_box_distance(o + t * d, box) - r; };
    if (f(0.0) <= 0.0)
        return 0.0;

    // Bounding-sphere reject.
    const double half_diag = 0.5 * norm(box.extents);
    const Vec3 oc = box.center - o;
    const double along = dot(oc, d);
    const double perp = norm(oc - along * d);
    if (along + half_diag + r < 0.0 || perp > half_diag + r)
        return std::nullopt;

    double lo = 0.0;
    double hi = std::max(along + half_diag + r, 0.0) + 1.0;
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - phi * (hi - lo);
    double x2 = lo + phi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int i = 0; i < 160 && f1 > 0.0 && f2 > 0.0; ++i) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = f(x2);
        }
    }
    double inside;
    if (f1 <= 0.0)
        inside = x1;
    else if (f2 <= 0.0)
        inside = x2;
    else
        return std::nullopt;

    double a = 0.0;
    double b = inside;
    for (int i = 0; i < 200; ++i) {
        const double m = 0.5 * (a + b);
        if (f(m) <= 0.0)
            b = m;
        else
            a = m;
    }
    return b;
}

struct OracleHit {
    std::size_t index;
    double distance;
};

/// Tests every visible object, sorts by entry distance (stable in scene order).
inline std::optional<OracleHit> oracle_cast(const Scene& scene, const Vec3& o, const Vec3& d, double r)
{
    std::vector<OracleHit> hits;
    for (std::size_t i = 0; i < scene.objects.size(); ++i) {
        if (scene.objects[i].hidden)
            continue;
        if (auto t = oracle_entry(scene.objects[i].bbox, o, d, r))
            hits.push_back({i, *t});
    }
    std::stable_sort(hits.begin(), hits.end(),
                     [](const OracleHit& a, const OracleHit& b) { return a.distance < b.distance; });
    if (hits.empty())
        return std::nullopt;
    return hits.front();
}

// ---------------------------------------------------------------------------

/// Kendall's tau-a between two equally long sequences.
inline double kendall_tau(std::span<const double> x, std::span<const double> y)
{
    long long concordant = 0;
    long long discordant = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            const double s = (x[i] - x[j]) * (y[i] - y[j]);
            if (s > 0)
                ++concordant;
            else if (s < 0)
                ++discordant;
        }
    }
    const double pairs = static_cast<double>(x.size()) * static_cast<double>(x.size() - 1) / 2.0;
    return static_cast<double>(concordant - discordant) / pairs;
}

/// Frequency of the largest magnitude bin (zero-padded FFT, parabolic
/// interpolation on log magnitude). Optionally restricted to [lo_hz, hi_hz].
inline double spectral_peak_hz(std::span<const double> signal, int rate, std::size_t fft_size = 1 << 16,
                               double lo_hz = 0.0, double hi_hz = std::numeric_limits<double>::infinity())
{
    std::vector<double> in(fft_size, 0.0);
    std::copy_n(signal.begin(), std::min(signal.size(), fft_size), in.begin());
    const std::size_t bins = fft_size / 2 + 1;
    fftw_complex* out = fftw_alloc_complex(bins);
    fftw_plan plan = fftw_plan_dft_r2c_1d(static_cast<int>(fft_size), in.data(), out, FFTW_ESTIMATE);
    fftw_execute(plan);

    std::vector<double> mag(bins);
    for (std::size_t k = 0; k < bins; ++k)
        mag[k] = std::hypot(out[k][0], out[k][1]);
    fftw_destroy_plan(plan);
    fftw_free(out);

    const double bin_hz = static_cast<double>(rate) / static_cast<double>(fft_size);
    const auto first = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(lo_hz / bin_hz)));
    const auto last = std::min<double>(static_cast<double>(bins - 2), std::floor(hi_hz / bin_hz));
    std::size_t best = first;
    for (std::size_t k = first; static_cast<double>(k) <= last; ++k) {
        if (mag[k] > mag[best])
            best = k;
    }
    const double a = std::log(mag[best - 1] + 1e-300);
    const double b = std::log(mag[best] + 1e-300);
    const double c = std::log(mag[best + 1] + 1e-300);
    const double denom = a - 2.0 * b + c;
    const double offset = denom != 0.0 ? 0.5 * (a - c) / denom : 0.0;
    return (static_cast<double>(best) + offset) * bin_hz;
}

/// Minimal RIFF reader for 16-bit PCM, independent of the writer.
struct WavData {
    std::uint16_t format = 0;
    std::uint16_t channels = 0;
    std::uint32_t sample_rate = 0;
    std::uint16_t bits = 0;
    std::uint32_t frames = 0;
    std::vector<std::int16_t> samples; // interleaved
};

inline std::optional<WavData> read_wav(const fs::path& p)
{
    const std::string bytes = read_text(p);
    auto u16 = [&](std::size_t at) {
        return static_cast<std::uint16_t>(static_cast<unsigned char>(bytes[at]) |
                                          (static_cast<unsigned char>(bytes[at + 1]) << 8));
    };
    auto u32 = [&](std::size_t at) { return static_cast<std::uint32_t>(u16(at) | (std::uint32_t{u16(at + 2)} << 16)); };
    if (bytes.size() < 12 || bytes.compare(0, 4, "RIFF") != 0 || bytes.compare(8, 4, "WAVE") != 0)
        return std::nullopt;
    WavData wav;
    std::size_t pos = 12;
    bool have_fmt = false;
    while (pos + 8 <= bytes.size()) {
        const std::string id = bytes.substr(pos, 4);
        const std::uint32_t size = u32(pos + 4);
        const std::size_t body = pos + 8;
        if (body + size > bytes.size())
            return std::nullopt;
        if (id == "fmt ") {
            wav.format = u16(body);
            wav.channels = u16(body + 2);
            wav.sample_rate = u32(body + 4);
            wav.bits = u16(body + 14);
            have_fmt = true;
        } else if (id == "data" && have_fmt) {
            const std::size_t n = size / 2;
            wav.samples.resize(n);
            for (std::size_t i = 0; i < n; ++i)
                wav.samples[i] = static_cast<std::int16_t>(u16(body + 2 * i));
            wav.frames = static_cast<std::uint32_t>(n / std::max<std::uint16_t>(wav.channels, 1));
            return wav;
        }
        pos = body + size + (size & 1u);
    }
    return std::nullopt;
}

} // namespace test
