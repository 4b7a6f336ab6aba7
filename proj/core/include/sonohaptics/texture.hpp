#pragma once

#include <sonohaptics/scene.hpp>

#include <cstddef>
#include <filesystem>
#include <vector>

namespace sonohaptics {

struct RgbImage {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<Rgb8> pixels; // row-major
};

/// Decodes a PNG to 8-bit RGB. Gray is expanded, 16-bit is stripped to
/// 8-bit, palettes are expanded and alpha is dropped. Throws TextureError.
RgbImage read_png(const std::filesystem::path& path);

/// Writes an 8-bit RGB PNG. Throws TextureError.
void write_png(const RgbImage& image, const std::filesystem::path& path);

} // namespace sonohaptics
