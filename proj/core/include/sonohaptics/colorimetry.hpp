#pragma once

#include <sonohaptics/scene.hpp>

#include <span>

namespace sonohaptics {

/// CIELAB coordinates relative to the D65 white (2 degree observer).
struct LabColor {
    double L = 0.0;
    double a = 0.0;
    double b = 0.0;
};

/// sRGB (IEC 61966-2-1) -> linear RGB -> XYZ -> CIELAB. The XYZ white is
/// taken from the same matrix, so (255,255,255) lands exactly on L=100, a=b=0.
LabColor srgb_to_lab(Rgb8 rgb);

/// Mean of the per-pixel L values. Averaging happens after conversion.
double mean_lightness(std::span<const Rgb8> pixels);

/// L of a base color, or the mean per-pixel L of a texture. Throws
/// TextureError when the texture cannot be read.
double object_lightness(const SceneObject& obj);

} // namespace sonohaptics
