// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include "test_support.hpp"

#include <sonohaptics/colorimetry.hpp>
#include <sonohaptics/crossmodal.hpp>
#include <sonohaptics/engine.hpp>
#include <sonohaptics/replay.hpp>
#include <sonohaptics/simulate.hpp>
#include <sonohaptics/sphere_cast.hpp>
#include <sonohaptics/synthesis.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>

using namespace sonohaptics;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Outcome pitch_model()
{
    if (pitch_from_lightness(0.0) != 184.05)
        return {false, "p(0) != 184.05"};
    double worst = 0.0;
    for (double l : {25.0, 50.0, 75.0, 100.0}) {
        const double want = 184.05 + l * (0.375 + l * 0.054);
        worst = std::max(worst, std::abs(pitch_from_lightness(l) - want));
    }
    std::vector<double> x;
    std::vector<double> y;
    for (int i = 0; i <= 1000; ++i) {
        x.push_back(0.1 * i);
        y.push_back(pitch_from_lightness(0.1 * i));
    }
    const double tau = test::kendall_tau(x, y);
    return {worst <= 1e-6 && tau == 1.0, fmt("max |dp| = %.2e Hz, tau = %.6f", worst, tau)};
}

Outcome amplitude_model()
{
    if (amplitude_polynomial(0.0) != 0.275)
        return {false, "a(0) != 0.275"};
    std::vector<double> x;
    std::vector<double> y;
    for (int i = 0; i <= 2000; ++i) {
        const double s = 2116.0 + (21609.0 - 2116.0) * i / 2000.0;
        x.push_back(s);
        y.push_back(amplitude_from_size(s));
    }
    const double tau = test::kendall_tau(x, y);
    bool bounded = true;
    for (double s = -1e5; s <= 1e6; s += 137.0) {
        const double a = amplitude_from_size(s);
        bounded = bounded && a >= 0.125 && a <= 1.0;
    }
    return {tau == 1.0 && bounded, fmt("tau = %.6f, clamped range ok = %s", tau, bounded ? "yes" : "no")};
}

Outcome colorimetry()
{
    const double white = srgb_to_lab({255, 255, 255}).L;
    const double black = srgb_to_lab({0, 0, 0}).L;
    std::istringstream csv(test::read_text(test::data_dir() / "lab_lattice.csv"));
    std::string line;
    std::getline(csv, line);
    double worst = 0.0;
    int rows = 0;
    while (std::getline(csv, line)) {
        int r, g, b;
        double L, A, B;
        if (std::sscanf(line.c_str(), "%d,%d,%d,%lf,%lf,%lf", &r, &g, &b, &L, &A, &B) != 6)
            return {false, "bad oracle row: " + line};
        const auto lab = srgb_to_lab({static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(g),
                                      static_cast<std::uint8_t>(b)});
        worst = std::max(worst, std::abs(lab.L - L));
        ++rows;
    }
    const bool ok = white == 100.0 && black == 0.0 && rows == 17 * 17 * 17 && worst < 0.1;
    return {ok, fmt("white L = %.17g, black L = %.17g, %d lattice points, max |dL| = %.2e", white, black, rows,
                    worst)};
}

Outcome local_amplification()
{
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> ext(0.05, 1.2);
    std::uniform_int_distribution<int> gray(0, 255);
    double worst_pitch = 0.0;
    double worst_amp = 0.0;
    int not_greater = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int k = 2 + trial % 7;
        Scene scene;
        const Vec3 centre{3.0 * u(rng), 1.0 + u(rng), 4.0 + u(rng)};
        auto add = [&](const std::string& id, const Vec3& pos) {
            const auto g = static_cast<std::uint8_t>(gray(rng));
            scene.objects.push_back(test::make_object(id, pos, {ext(rng), ext(rng), ext(rng)}, {g, g, g}));
        };
        add("anchor", centre);
        for (int i = 1; i < k; ++i) // inside the 1 m radius
            add("near" + std::to_string(i), centre + 0.55 * Vec3{u(rng), u(rng), u(rng)});
        for (int i = 0; i < 4; ++i) // outside it
            add("far" + std::to_string(i), centre + Vec3{5.0 + i, u(rng), u(rng)});

        const auto features = extract_features(scene);
        const auto cluster = local_cluster(features, features[0], 1.0);
        if (static_cast<int>(cluster.size()) != k)
            return {false, fmt("trial %d: cluster size %zu, expected %d", trial, cluster.size(), k)};

        const auto assigned = local_assignments(cluster);
        std::vector<double> lp, la, gp, ga;
        for (const auto& f : cluster) {
            lp.push_back(assigned.at(f.id).pitch_hz);
            la.push_back(assigned.at(f.id).amplitude);
            gp.push_back(pitch_from_lightness(f.lightness));
            ga.push_back(amplitude_from_size(f.area));
        }
        auto min_gap = [](std::vector<double> v) {
            std::sort(v.begin(), v.end());
            double m = std::numeric_limits<double>::infinity();
            for (std::size_t i = 1; i < v.size(); ++i)
                m = std::min(m, v[i] - v[i - 1]);
            return m;
        };
        const double lpg = min_gap(lp);
        const double lag = min_gap(la);
        worst_pitch = std::max(worst_pitch, std::abs(lpg - 856.96 / (k - 1)));
        worst_amp = std::max(worst_amp, std::abs(lag - 0.875 / (k - 1)));
        if (!(lpg > min_gap(gp)) || !(lag > min_gap(ga)))
            ++not_greater;
    }
    return {worst_pitch <= 1e-6 && worst_amp <= 1e-6 && not_greater == 0,
            fmt("max pitch gap error %.2e Hz, max amplitude gap error %.2e, local <= global in %d of 1000",
                worst_pitch, worst_amp, not_greater)};
}

Outcome sphere_cast_equivalence()
{
    std::mt19937_64 rng(31337);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> rad(0.0, 0.8);
    int mismatches = 0;
    int hits = 0;
    const int pairs = 100000;
    for (int trial = 0; trial < pairs; ++trial) {
        const Scene scene = test::random_scene(rng, 1 + trial % 12);
        const Vec3 o{u(rng), u(rng), u(rng)};
        const Vec3 d = normalized(Vec3{u(rng), u(rng), 1.0 + u(rng) * 0.5});
        const double r = rad(rng);
        const auto got = sphere_cast(scene, o, d, r);
        const auto want = test::oracle_cast(scene, o, d, r);
        if (got.has_value() != want.has_value() ||
            (got && (got->index != want->index || std::abs(got->distance - want->distance) > 1e-6)))
            ++mismatches;
        hits += got.has_value();
    }
    return {mismatches == 0, fmt("%d pairs, %d hits, %d mismatches", pairs, hits, mismatches)};
}

Outcome synthesis()
{
    SynthConfig cfg;
    cfg.impact_gain = 0.0;
    double worst_f = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double f = 130.81 * std::pow(987.77 / 130.81, i / 19.0);
        const FeedbackCue cue{CueKind::sonohaptics, f, 0.5, 0.0, Material::plastic, 0.4};
        const auto buf = render_cue_audio(cue, default_timbres(), cfg);
        const std::vector<double> left(buf.left.begin(), buf.left.end());
        worst_f = std::max(worst_f, std::abs(test::spectral_peak_hz(left, cfg.audio_rate) - f));
    }
    double worst_pan = 0.0;
    for (int i = 0; i <= 100; ++i) {
        const auto [l, r] = pan_gains(-1.0 + 0.02 * i);
        worst_pan = std::max(worst_pan, std::abs(l * l + r * r - 1.0));
    }
    auto rms = [](double a) {
        const FeedbackCue cue{CueKind::sonohaptics, 440.0, a, 0.0, Material::plastic, 0.4};
        const auto buf = render_cue_haptics(cue);
        const auto& ch = buf.channels[0];
        const std::size_t edge = 5;
        double e = 0.0;
        for (std::size_t i = edge; i + edge < ch.size(); ++i)
            e += static_cast<double>(ch[i]) * ch[i];
        return std::sqrt(e / static_cast<double>(ch.size() - 2 * edge));
    };
    const double unit = rms(1.0);
    double worst_lin = 0.0;
    for (int i = 0; i <= 14; ++i) {
        const double a = 0.125 + 0.0625 * i;
        worst_lin = std::max(worst_lin, std::abs(rms(a) / (a * unit) - 1.0));
    }
    return {worst_f <= 1.0 && worst_pan <= 1e-9 && worst_lin <= 0.01,
            fmt("max |df| = %.3f Hz over 20 pitches, max |gL^2+gR^2-1| = %.1e, haptic RMS nonlinearity %.2e",
                worst_f, worst_pan, worst_lin)};
}

Outcome determinism()
{
    test::TempDir dir;
    auto scene = std::make_shared<const Scene>(load_scene(test::scene_path(1)));
    const auto trace = test::fixtures_dir() / "traces" / "living-room-1.trace.jsonl";
    std::size_t lines = 0;
    {
        std::istringstream in(test::read_text(trace));
        std::string l;
        while (std::getline(in, l))
            lines += !l.empty();
    }
    replay_file(scene, trace, dir / "a.jsonl");
    replay_file(scene, trace, dir / "b.jsonl");
    const std::string a = test::read_text(dir / "a.jsonl");
    const bool same_log = !a.empty() && a == test::read_text(dir / "b.jsonl");

    const SimulationOptions opts{kDefaultGazeNoiseDeg, 5000, 2024};
    const bool same_sim =
        report_to_json(simulate(*scene, opts)).dump() == report_to_json(simulate(*scene, opts)).dump();
    return {lines == 500 && same_log && same_sim,
            fmt("%zu trace lines, %zu log bytes, logs identical = %s, simulation reports identical = %s", lines,
                a.size(), same_log ? "yes" : "no", same_sim ? "yes" : "no")};
}

Outcome simulation_trend()
{
    const std::array<double, 4> sigmas{0.0, 0.5, 1.652, 5.0};
    std::string detail;
    bool ok = true;
    std::size_t small_err = 0, small_n = 0, large_err = 0, large_n = 0;
    for (int n = 1; n <= 5; ++n) {
        const Scene scene = load_scene(test::scene_path(n));
        std::array<double, 4> rates{};
        for (std::size_t i = 0; i < sigmas.size(); ++i) {
            const auto report = simulate(scene, {sigmas[i], 10000, static_cast<std::uint64_t>(100 + n)});
            rates[i] = report.error_rate;
            if (sigmas[i] == kDefaultGazeNoiseDeg) {
                // Split objects at the median face area.
                std::vector<std::pair<double, std::string>> by_area;
                for (const auto& obj : scene.objects) {
                    const auto dims = face_dims(obj);
                    by_area.emplace_back(dims.width * dims.height, obj.id);
                }
                std::sort(by_area.begin(), by_area.end());
                for (std::size_t k = 0; k < by_area.size(); ++k) {
                    const auto& tally = report.per_object.at(by_area[k].second);
                    if (k < by_area.size() / 2) {
                        small_err += tally.errors();
                        small_n += tally.trials;
                    } else {
                        large_err += tally.errors();
                        large_n += tally.trials;
                    }
                }
            }
        }
        ok = ok && rates[0] == 0.0;
        for (std::size_t i = 1; i < rates.size(); ++i)
            ok = ok && rates[i] >= rates[i - 1] - 0.02;
        detail += fmt("%sscene %d: %.4f/%.4f/%.4f/%.4f", n == 1 ? "" : "; ", n, rates[0], rates[1], rates[2],
                      rates[3]);
    }
    const double small_rate = static_cast<double>(small_err) / static_cast<double>(small_n);
    const double large_rate = static_cast<double>(large_err) / static_cast<double>(large_n);
    ok = ok && small_rate >= large_rate;
    return {ok, detail + fmt("; at 1.652 deg small objects %.4f vs large %.4f", small_rate, large_rate)};
}

Outcome static_baseline()
{
    int checked = 0;
    for (int n = 1; n <= 5; ++n) {
        auto scene = std::make_shared<const Scene>(load_scene(test::scene_path(n)));
        EngineConfig cfg;
        cfg.cue_kind = CueKind::static_tone;
        Engine engine(scene, cfg);
        const HeadPose head{scene->viewpoint.position, scene->viewpoint.forward};
        const auto params = scene_stats(*scene);
        engine.activate(0.0);
        for (std::size_t i = 0; i < scene->objects.size(); ++i) {
            for (bool snap : {false, true}) {
                const auto g = global_cue(scene->objects[i], params, head, {CueKind::static_tone, snap, 0.5});
                const auto e = engine.cue_for(i, head);
                if (g.pitch_hz != 220.0 || g.duration_s != 0.2 || e.pitch_hz != 220.0 || e.duration_s != 0.2)
                    return {false, "object " + scene->objects[i].id};
                ++checked;
            }
        }
        // Local mode too.
        GazeSample s;
        s.eye_origin = s.head_pos = scene->viewpoint.position;
        s.eye_dir = normalized(scene->objects[0].bbox.center - s.eye_origin);
        engine.step(s);
        engine.enter_local(0.1);
        for (std::size_t i = 0; i < scene->objects.size(); ++i) {
            const auto c = engine.cue_for(i, head);
            if (c.kind == CueKind::static_tone && (c.pitch_hz != 220.0 || c.duration_s != 0.2))
                return {false, "local object " + scene->objects[i].id};
            ++checked;
        }
    }
    return {true, fmt("%d cues, all 220.0 Hz / 0.2 s", checked)};
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"pitch model", pitch_model},
        {"amplitude model", amplitude_model},
        {"colorimetry", colorimetry},
        {"local amplification", local_amplification},
        {"sphere cast vs oracle", sphere_cast_equivalence},
        {"synthesis", synthesis},
        {"determinism", determinism},
        {"simulation trend", simulation_trend},
        {"static baseline cue", static_baseline},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %zu %s (%.0f ms): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, ms,
                    o.detail.c_str());
        std::fflush(stdout);
        failed += !o.pass;
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
