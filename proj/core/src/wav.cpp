#include <sonohaptics/synthesis.hpp>

#include <sonohaptics/error.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>

namespace sonohaptics {

namespace {

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v)
{
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v)
{
    for (int i = 0; i < 4; ++i)
        out.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
}

void put_tag(std::vector<std::uint8_t>& out, const char (&tag)[5])
{
    out.insert(out.end(), tag, tag + 4);
}

std::int16_t quantize(float x)
{
    const double v = std::clamp(static_cast<double>(x), -1.0, 1.0);
    return static_cast<std::int16_t>(std::lround(v * 32767.0));
}

} // namespace

std::vector<std::uint8_t> encode_wav(const StereoBuffer& buf)
{
    if (buf.left.size() != buf.right.size())
        throw IoError("stereo channels differ in length");
    constexpr std::uint16_t channels = 2;
    constexpr std::uint16_t bits = 16;
    const auto rate = static_cast<std::uint32_t>(buf.sample_rate);
    const auto data_bytes = static_cast<std::uint32_t>(buf.frames() * channels * (bits / 8));

    std::vector<std::uint8_t> out;
    out.reserve(44 + data_bytes);
    put_tag(out, "RIFF");
    put_u32(out, 36 + data_bytes);
    put_tag(out, "WAVE");
    put_tag(out, "fmt ");
    put_u32(out, 16);
    put_u16(out, 1); // PCM
    put_u16(out, channels);
    put_u32(out, rate);
    put_u32(out, rate * channels * (bits / 8));
    put_u16(out, channels * (bits / 8));
    put_u16(out, bits);
    put_tag(out, "data");
    put_u32(out, data_bytes);
    for (std::size_t i = 0; i < buf.frames(); ++i) {
        put_u16(out, static_cast<std::uint16_t>(quantize(buf.left[i])));
        put_u16(out, static_cast<std::uint16_t>(quantize(buf.right[i])));
    }
    return out;
}

void write_wav(const StereoBuffer& buf, const std::filesystem::path& path)
{
    const std::vector<std::uint8_t> bytes = encode_wav(buf);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot create " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw IoError("write failed: " + path.string());
}

} // namespace sonohaptics
