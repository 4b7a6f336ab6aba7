#include <sonohaptics/colorimetry.hpp>

#include <sonohaptics/texture.hpp>

#include <array>
#include <cmath>

namespace sonohaptics {

namespace {

// linear sRGB -> XYZ, D65
constexpr double kM[3][3] = {
    {0.4124564, 0.3575761, 0.1804375},
    {0.2126729, 0.7151522, 0.0721750},
    {0.0193339, 0.1191920, 0.9503041},
};

constexpr double kWhiteX = kM[0][0] + kM[0][1] + kM[0][2];
constexpr double kWhiteY = kM[1][0] + kM[1][1] + kM[1][2];
constexpr double kWhiteZ = kM[2][0] + kM[2][1] + kM[2][2];

// CIE constants in exact rational form.
constexpr double kEpsilon = 216.0 / 24389.0;
constexpr double kKappa = 24389.0 / 27.0;

const std::array<double, 256>& linear_table()
{
    static const std::array<double, 256> table = [] {
        std::array<double, 256> t{};
        for (int i = 0; i < 256; ++i) {
            const double c = i / 255.0;
            t[i] = c <= 0.04045 ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4);
        }
        return t;
    }();
    return table;
}

double lab_f(double t)
{
    return t > kEpsilon ? std::cbrt(t) : (kKappa * t + 16.0) / 116.0;
}

} // namespace

LabColor srgb_to_lab(Rgb8 rgb)
{
    const auto& lin = linear_table();
    const double r = lin[rgb.r];
    const double g = lin[rgb.g];
    const double b = lin[rgb.b];

    const double x = (kM[0][0] * r + kM[0][1] * g + kM[0][2] * b) / kWhiteX;
    const double y = (kM[1][0] * r + kM[1][1] * g + kM[1][2] * b) / kWhiteY;
    const double z = (kM[2][0] * r + kM[2][1] * g + kM[2][2] * b) / kWhiteZ;

    const double fx = lab_f(x);
    const double fy = lab_f(y);
    const double fz = lab_f(z);

    LabColor lab;
    lab.L = y > kEpsilon ? 116.0 * fy - 16.0 : kKappa * y;
    lab.a = 500.0 * (fx - fy);
    lab.b = 200.0 * (fy - fz);
    return lab;
}

double mean_lightness(std::span<const Rgb8> pixels)
{
    if (pixels.empty())
        return 0.0;
    double sum = 0.0;
    for (const Rgb8& p : pixels)
        sum += srgb_to_lab(p).L;
    return sum / static_cast<double>(pixels.size());
}

double object_lightness(const SceneObject& obj)
{
    if (const auto* rgb = std::get_if<Rgb8>(&obj.color))
        return srgb_to_lab(*rgb).L;
    const RgbImage image = read_png(std::get<TextureRef>(obj.color).path);
    return mean_lightness(image.pixels);
}

} // namespace sonohaptics
