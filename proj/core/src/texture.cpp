#include <sonohaptics/texture.hpp>

#include <sonohaptics/error.hpp>

#include <png.h>

#include <cstdio>
#include <memory>

namespace sonohaptics {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const { std::fclose(f); }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

} // namespace

RgbImage read_png(const std::filesystem::path& path)
{
    FilePtr file(std::fopen(path.c_str(), "rb"));
    if (!file)
        throw TextureError("cannot open texture " + path.string());

    png_byte sig[8];
    if (std::fread(sig, 1, sizeof sig, file.get()) != sizeof sig || png_sig_cmp(sig, 0, sizeof sig) != 0)
        throw TextureError("not a PNG file: " + path.string());

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png)
        throw TextureError("libpng init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw TextureError("libpng init failed");
    }

    RgbImage image;
    std::vector<png_bytep> rows;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw TextureError("corrupt PNG: " + path.string());
    }

    png_init_io(png, file.get());
    png_set_sig_bytes(png, sizeof sig);
    png_read_info(png, info);

    const png_byte color_type = png_get_color_type(png, info);
    const png_byte depth = png_get_bit_depth(png, info);
    if (depth == 16)
        png_set_strip_16(png);
    if (color_type == PNG_COLOR_TYPE_PALETTE)
        png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && depth < 8)
        png_set_expand_gray_1_2_4_to_8(png);
    if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA)
        png_set_gray_to_rgb(png);
    if (color_type & PNG_COLOR_MASK_ALPHA)
        png_set_strip_alpha(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS))
        png_set_strip_alpha(png);
    png_read_update_info(png, info);

    image.width = png_get_image_width(png, info);
    image.height = png_get_image_height(png, info);
    if (png_get_rowbytes(png, info) != image.width * 3) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw TextureError("unsupported PNG layout: " + path.string());
    }
    image.pixels.resize(image.width * image.height);
    rows.resize(image.height);
    for (std::size_t y = 0; y < image.height; ++y)
        rows[y] = reinterpret_cast<png_bytep>(image.pixels.data() + y * image.width);
    png_read_image(png, rows.data());
    png_destroy_read_struct(&png, &info, nullptr);

    if (image.pixels.empty())
        throw TextureError("empty texture: " + path.string());
    return image;
}

void write_png(const RgbImage& image, const std::filesystem::path& path)
{
    FilePtr file(std::fopen(path.c_str(), "wb"));
    if (!file)
        throw TextureError("cannot create " + path.string());

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_write_struct(&png, nullptr);
        throw TextureError("libpng init failed");
    }
    std::vector<png_bytep> rows(image.height);
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw TextureError("PNG write failed: " + path.string());
    }
    png_init_io(png, file.get());
    png_set_IHDR(png, info, static_cast<png_uint_32>(image.width), static_cast<png_uint_32>(image.height), 8,
                 PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    for (std::size_t y = 0; y < image.height; ++y)
        rows[y] = const_cast<png_bytep>(reinterpret_cast<const png_byte*>(image.pixels.data() + y * image.width));
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

} // namespace sonohaptics
