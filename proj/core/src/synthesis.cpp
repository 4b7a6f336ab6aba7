#include <sonohaptics/synthesis.hpp>

#include <sonohaptics/error.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace sonohaptics {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

} // namespace

void validate(const SynthConfig& cfg)
{
    if (cfg.audio_rate <= 0 || cfg.haptic_rate <= 0)
        throw InvalidCueError("sample rates must be positive");
    if (!(cfg.haptic_carrier_hz > 0.0) || cfg.haptic_carrier_hz >= 0.5 * cfg.haptic_rate)
        throw InvalidCueError("haptic carrier must lie below the haptic Nyquist frequency");
    if (!(cfg.edge_s >= 0.0))
        throw InvalidCueError("edge time must be nonnegative");
    if (!(cfg.peak > 0.0 && cfg.peak <= 1.0))
        throw InvalidCueError("peak must be in (0, 1]");
    if (cfg.repeats < 1)
        throw InvalidCueError("repeats must be at least 1");
    if (cfg.impact_gain < 0.0)
        throw InvalidCueError("impact gain must be nonnegative");
}

std::size_t frame_count(double duration_s, int rate)
{
    return static_cast<std::size_t>(std::llround(duration_s * rate));
}

std::vector<double> pulse_envelope(std::size_t frames, int rate, double edge_s)
{
    std::vector<double> env(frames, 1.0);
    const std::size_t edge = std::min(frame_count(edge_s, rate), frames / 2);
    for (std::size_t i = 0; i < edge; ++i) {
        const double g = 0.5 * (1.0 - std::cos(std::numbers::pi * static_cast<double>(i) / static_cast<double>(edge)));
        env[i] = g;
        env[frames - 1 - i] = g;
    }
    return env;
}

std::vector<double> render_pulse(double pitch_hz, double duration_s, int rate, double edge_s)
{
    const std::size_t n = frame_count(duration_s, rate);
    std::vector<double> out = pulse_envelope(n, rate, edge_s);
    for (std::size_t i = 0; i < n; ++i)
        out[i] *= std::sin(kTwoPi * pitch_hz * static_cast<double>(i) / rate);
    return out;
}

std::vector<double> render_impact(const TimbrePreset& preset, std::size_t frames, int rate, std::uint64_t seed)
{
    std::vector<double> modal(frames, 0.0);
    const double nyquist = 0.5 * rate;
    for (const ImpactMode& mode : preset.modes) {
        const double f = preset.base_hz * mode.ratio;
        if (f >= nyquist)
            continue;
        for (std::size_t i = 0; i < frames; ++i) {
            const double t = static_cast<double>(i) / rate;
            modal[i] += mode.gain * std::exp(-t / mode.decay_s) * std::sin(kTwoPi * f * t);
        }
    }

    std::vector<double> noise(frames, 0.0);
    if (preset.noise_mix > 0.0) {
        // Raw engine output, not std::uniform_real_distribution, so the noise
        // is identical across standard library implementations.
        std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(preset.material) + 1) * 0x9E3779B97F4A7C15ull);
        const double alpha =
            preset.noise_lowpass_hz > 0.0 ? 1.0 - std::exp(-kTwoPi * preset.noise_lowpass_hz / rate) : 1.0;
        double state = 0.0;
        for (std::size_t i = 0; i < frames; ++i) {
            const double white = static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
            state += alpha * (white - state);
            noise[i] = state * std::exp(-static_cast<double>(i) / rate / preset.noise_decay_s);
        }
    }

    auto peak_of = [](const std::vector<double>& v) {
        double p = 0.0;
        for (double x : v)
            p = std::max(p, std::abs(x));
        return p;
    };
    const double modal_peak = peak_of(modal);
    const double noise_peak = peak_of(noise);

    std::vector<double> out(frames, 0.0);
    for (std::size_t i = 0; i < frames; ++i) {
        const double m = modal_peak > 0.0 ? modal[i] / modal_peak : 0.0;
        const double z = noise_peak > 0.0 ? noise[i] / noise_peak : 0.0;
        out[i] = (1.0 - preset.noise_mix) * m + preset.noise_mix * z;
    }
    const double p = peak_of(out);
    if (p > 0.0) {
        for (double& x : out)
            x /= p;
    }
    return out;
}

std::pair<double, double> pan_gains(double pan)
{
    const double theta = (std::clamp(pan, -1.0, 1.0) + 1.0) * std::numbers::pi / 4.0;
    return {std::cos(theta), std::sin(theta)};
}

namespace {

// One cue instance, mono, before normalization.
std::vector<double> render_mono_pulse(const FeedbackCue& cue, const TimbreTable& timbres, const SynthConfig& cfg)
{
    if (cue.kind == CueKind::static_tone)
        return render_pulse(kStaticPitchHz, kStaticDurationS, cfg.audio_rate, cfg.edge_s);

    std::vector<double> mono = render_pulse(cue.pitch_hz, cue.duration_s, cfg.audio_rate, cfg.edge_s);
    if (cfg.impact_gain > 0.0) {
        const std::vector<double> impact = render_impact(timbres.at(cue.timbre), mono.size(), cfg.audio_rate, cfg.seed);
        // The impact starts on the hit; only its tail is faded out.
        const std::vector<double> env = pulse_envelope(mono.size(), cfg.audio_rate, cfg.edge_s);
        const std::size_t half = mono.size() / 2;
        for (std::size_t i = 0; i < mono.size(); ++i)
            mono[i] += cfg.impact_gain * impact[i] * (i < half ? 1.0 : env[i]);
    }
    return mono;
}

double cue_length_s(const FeedbackCue& cue)
{
    return cue.kind == CueKind::static_tone ? kStaticDurationS : cue.duration_s;
}

std::size_t onset_frame(int index, const SynthConfig& cfg, int rate)
{
    return frame_count(index * cfg.repeat_interval_s, rate);
}

} // namespace

StereoBuffer render_cue_audio(const FeedbackCue& cue, const TimbreTable& timbres, const SynthConfig& cfg)
{
    validate(cue);
    validate(cfg);

    const std::size_t pulse_frames = frame_count(cue_length_s(cue), cfg.audio_rate);
    const std::size_t total = onset_frame(cfg.repeats - 1, cfg, cfg.audio_rate) + pulse_frames;

    StereoBuffer buf;
    buf.sample_rate = cfg.audio_rate;
    buf.left.assign(total, 0.0f);
    buf.right.assign(total, 0.0f);
    if (cue.kind == CueKind::silent)
        return buf;

    std::vector<double> one = render_mono_pulse(cue, timbres, cfg);
    double peak = 0.0;
    for (double x : one)
        peak = std::max(peak, std::abs(x));
    const double scale = peak > 0.0 ? cfg.peak / peak : 0.0;

    std::vector<double> mono(total, 0.0);
    for (int r = 0; r < cfg.repeats; ++r) {
        const std::size_t start = onset_frame(r, cfg, cfg.audio_rate);
        for (std::size_t i = 0; i < one.size() && start + i < total; ++i)
            mono[start + i] += one[i] * scale;
    }

    const auto [gl, gr] = pan_gains(cue.pan);
    for (std::size_t i = 0; i < total; ++i) {
        const double x = std::clamp(mono[i], -1.0, 1.0);
        buf.left[i] = static_cast<float>(gl * x);
        buf.right[i] = static_cast<float>(gr * x);
    }
    return buf;
}

HapticBuffer render_cue_haptics(const FeedbackCue& cue, const SynthConfig& cfg)
{
    validate(cue);
    validate(cfg);

    const int rate = cfg.haptic_rate;
    const std::size_t pulse_frames = frame_count(cue_length_s(cue), rate);
    const std::size_t total = onset_frame(cfg.repeats - 1, cfg, rate) + pulse_frames;

    std::vector<float> drive(total, 0.0f);
    if (cue.kind != CueKind::silent) {
        const std::vector<double> env = pulse_envelope(pulse_frames, rate, cfg.edge_s);
        for (int r = 0; r < cfg.repeats; ++r) {
            const std::size_t start = onset_frame(r, cfg, rate);
            for (std::size_t i = 0; i < pulse_frames && start + i < total; ++i) {
                const double t = static_cast<double>(i) / rate;
                const double v = cue.amplitude * env[i] * std::sin(kTwoPi * cfg.haptic_carrier_hz * t);
                drive[start + i] = static_cast<float>(std::clamp(drive[start + i] + v, -1.0, 1.0));
            }
        }
    }

    HapticBuffer buf;
    buf.sample_rate = rate;
    buf.channels.fill(drive);
    return buf;
}

nlohmann::json haptics_to_json(const HapticBuffer& buf)
{
    nlohmann::json channels = nlohmann::json::array();
    for (const auto& ch : buf.channels)
        channels.push_back(ch);
    return {{"sample_rate", buf.sample_rate}, {"channels", channels}};
}

} // namespace sonohaptics
