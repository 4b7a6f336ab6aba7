#pragma once

#include <sonohaptics/crossmodal.hpp>
#include <sonohaptics/timbre.hpp>

#include <json.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <utility>
#include <vector>

namespace sonohaptics {

inline constexpr std::size_t kHapticChannels = 4; // actuators at the cardinal wrist positions

struct SynthConfig {
    int audio_rate = 48000;
    int haptic_rate = 1000;
    double haptic_carrier_hz = 170.0; // LRA resonance
    double edge_s = 0.005;            // raised-cosine attack and release
    double peak = 0.9;                // mono peak after normalization
    double impact_gain = 0.5;         // impact layer relative to the pulse
    int repeats = 1;                  // pulses per cue
    double repeat_interval_s = 0.0;   // onset spacing when repeats > 1
    std::uint64_t seed = 0x5EEDu;     // noise timbres
};

void validate(const SynthConfig& cfg);

/// Planar stereo PCM in [-1, 1].
struct StereoBuffer {
    int sample_rate = 48000;
    std::vector<float> left;
    std::vector<float> right;

    std::size_t frames() const { return left.size(); }
};

/// Uniform drive over the four actuators.
struct HapticBuffer {
    int sample_rate = 1000;
    std::array<std::vector<float>, kHapticChannels> channels;

    std::size_t frames() const { return channels[0].size(); }
};

std::size_t frame_count(double duration_s, int rate);

/// Raised-cosine attack/release with a flat sustain of value 1.
std::vector<double> pulse_envelope(std::size_t frames, int rate, double edge_s);

/// Enveloped sine at `pitch_hz`, unit amplitude.
std::vector<double> render_pulse(double pitch_hz, double duration_s, int rate, double edge_s);

/// Modal impact (plus seeded noise for noise-based presets), peak-normalized to 1.
std::vector<double> render_impact(const TimbrePreset& preset, std::size_t frames, int rate, std::uint64_t seed);

/// Constant-power pan gains {left, right}: cos and sin of (pan + 1) pi / 4.
std::pair<double, double> pan_gains(double pan);

/// Pulse plus material impact, normalized to cfg.peak and panned. Silent cues
/// render zeros; static cues render the bare 220 Hz pulse. Throws InvalidCueError.
StereoBuffer render_cue_audio(const FeedbackCue& cue, const TimbreTable& timbres = default_timbres(),
                              const SynthConfig& cfg = {});

/// amplitude * sin(2 pi f_c t) * envelope on each of the four channels.
HapticBuffer render_cue_haptics(const FeedbackCue& cue, const SynthConfig& cfg = {});

/// {"sample_rate":..,"channels":[[...],[...],[...],[...]]}
nlohmann::json haptics_to_json(const HapticBuffer& buf);

/// RIFF/WAVE, 16-bit PCM little-endian, 2 channels.
std::vector<std::uint8_t> encode_wav(const StereoBuffer& buf);

/// Throws IoError.
void write_wav(const StereoBuffer& buf, const std::filesystem::path& path);

} // namespace sonohaptics
