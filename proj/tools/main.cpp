// sonohaptics: offline analysis, trace replay, selection simulation, cue
// rendering and the interactive socket service.

#include <sonohaptics/analyze.hpp>
#include <sonohaptics/error.hpp>
#include <sonohaptics/events.hpp>
#include <sonohaptics/replay.hpp>
#include <sonohaptics/server.hpp>
#include <sonohaptics/simulate.hpp>
#include <sonohaptics/synthesis.hpp>

#include <CLI11.hpp>

#include <csignal>
#include <pthread.h>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <thread>

namespace sh = sonohaptics;
using nlohmann::json;

namespace {

void write_json(const json& j, const std::string& path)
{
    if (path == "-") {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw sh::IoError("cannot create " + path);
    out << j.dump(2) << '\n';
}

void print_analysis(const sh::DistinctivenessReport& r)
{
    std::printf("mode: %s", std::string(sh::to_string(r.mode)).c_str());
    if (r.anchor)
        std::printf("  anchor: %s  radius: %.3f", r.anchor->c_str(), r.radius);
    std::printf("\n%-28s %10s %9s %7s  %s\n", "object", "pitch_hz", "amplitude", "pan", "timbre");
    for (const auto& row : r.rows) {
        std::printf("%-28s %10.2f %9.4f %7.3f  %s\n", row.id.c_str(), row.pitch_hz, row.amplitude, row.pan,
                    std::string(sh::to_string(row.timbre)).c_str());
    }
    std::printf("pitch gap hz: min %.3f  mean %.3f\n", r.pitch_gap.min, r.pitch_gap.mean);
    std::printf("amplitude gap: min %.4f  mean %.4f\n", r.amplitude_gap.min, r.amplitude_gap.mean);
    if (r.global_pitch_gap && r.global_amplitude_gap) {
        std::printf("global cues, same cluster: pitch gap min %.3f, amplitude gap min %.4f\n",
                    r.global_pitch_gap->min, r.global_amplitude_gap->min);
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cross-modal audio-haptic feedback for gaze-based object selection"};
    app.require_subcommand(1);

    std::string scene_path;
    std::string timbre_path;
    std::string cue_kind = "sonohaptics";
    bool snap = false;
    double cast_radius = sh::kDefaultCastRadius;
    double local_radius = 1.0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("scene", scene_path, "Scene JSON file")->required()->check(CLI::ExistingFile);
        cmd->add_flag("--snap", snap, "Snap global pitches to the C3..B5 semitone grid");
    };
    auto add_engine = [&](CLI::App* cmd) {
        cmd->add_option("--cue-kind", cue_kind, "sonohaptics | static | silent")
            ->check(CLI::IsMember({"sonohaptics", "static", "silent"}));
        cmd->add_option("--cast-radius", cast_radius, "Sphere cast radius")->check(CLI::PositiveNumber);
        cmd->add_option("--local-radius", local_radius, "Local cluster radius")->check(CLI::PositiveNumber);
    };

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Cue table and pairwise distinctiveness");
    add_common(analyze);
    std::string mode = "global";
    std::string anchor;
    double radius = 1.0;
    std::string analyze_json;
    analyze->add_option("--mode", mode, "global | local")->check(CLI::IsMember({"global", "local"}));
    analyze->add_option("--anchor", anchor, "Anchor object id (local mode)");
    analyze->add_option("--radius", radius, "Local cluster radius")->check(CLI::PositiveNumber);
    analyze->add_option("--json", analyze_json, "Write the report as JSON (- for stdout)");

    // replay
    auto* replay = app.add_subcommand("replay", "Run a gaze trace through a fresh engine");
    add_common(replay);
    add_engine(replay);
    std::string trace_path;
    std::string events_out;
    replay->add_option("trace", trace_path, "Trace JSONL")->required()->check(CLI::ExistingFile);
    replay->add_option("--out", events_out, "Event log JSONL")->required();

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Noisy-gaze selection proxy");
    add_common(simulate);
    sh::SimulationOptions sim;
    std::string sim_json;
    simulate->add_option("--noise-deg", sim.noise_sigma_deg, "Angular noise sigma per axis (degrees)")
        ->check(CLI::NonNegativeNumber);
    simulate->add_option("--trials", sim.trials, "Number of trials")->check(CLI::PositiveNumber);
    simulate->add_option("--seed", sim.seed, "RNG seed");
    simulate->add_option("--cast-radius", sim.cast_radius, "Sphere cast radius")->check(CLI::PositiveNumber);
    simulate->add_option("--json", sim_json, "Write the report as JSON (- for stdout)");

    // render
    auto* render = app.add_subcommand("render", "Render one object's cue to WAV (and haptics JSON)");
    add_common(render);
    std::string object_id;
    std::string wav_out;
    std::string haptics_out;
    render->add_option("--object", object_id, "Object id")->required();
    render->add_option("--wav", wav_out, "Output WAV")->required();
    render->add_option("--haptics", haptics_out, "Output haptic waveform JSON");
    render->add_option("--cue-kind", cue_kind, "sonohaptics | static | silent")
        ->check(CLI::IsMember({"sonohaptics", "static", "silent"}));
    render->add_option("--timbres", timbre_path, "Timbre preset JSON")->check(CLI::ExistingFile);

    // serve
    auto* serve = app.add_subcommand("serve", "Interactive NDJSON socket service");
    add_common(serve);
    add_engine(serve);
    int port = 8787;
    std::string bind = "127.0.0.1";
    serve->add_option("--port", port, "TCP port")->check(CLI::Range(0, 65535));
    serve->add_option("--bind", bind, "Listen address");
    serve->add_option("--timbres", timbre_path, "Timbre preset JSON")->check(CLI::ExistingFile);

    CLI11_PARSE(app, argc, argv);

    try {
        auto scene = std::make_shared<const sh::Scene>(sh::load_scene(scene_path));
        sh::EngineConfig config;
        config.cue_kind = *sh::parse_cue_kind(cue_kind);
        config.snap_to_scale = snap;
        config.cast_radius = cast_radius;
        config.local_radius = local_radius;
        auto timbres = std::make_shared<const sh::TimbreTable>(
            timbre_path.empty() ? sh::TimbreTable{} : sh::TimbreTable::load(timbre_path));

        if (analyze->parsed()) {
            sh::AnalyzeOptions opts;
            opts.mode = mode == "local" ? sh::Mode::local : sh::Mode::global;
            if (!anchor.empty())
                opts.anchor = anchor;
            opts.radius = radius;
            opts.snap_to_scale = snap;
            const auto report = sh::analyze(*scene, opts);
            if (analyze_json != "-")
                print_analysis(report);
            if (!analyze_json.empty())
                write_json(sh::report_to_json(report), analyze_json);
        } else if (replay->parsed()) {
            const auto result = sh::replay_file(scene, trace_path, events_out, config);
            for (const auto& r : result.rejected)
                std::cerr << "entry " << r.index + 1 << ": " << r.message << '\n';
            std::cout << result.events.size() << " events written to " << events_out << '\n';
        } else if (simulate->parsed()) {
            const auto report = sh::simulate(*scene, sim);
            if (sim_json != "-") {
                std::printf("trials %zu  sigma %.3f deg  error rate %.4f  give-up rate %.4f\n", report.trials,
                            report.noise_sigma_deg, report.error_rate, report.give_up_rate);
                for (const auto& [id, t] : report.per_object)
                    std::printf("  %-28s %5zu trials  %5zu errors\n", id.c_str(), t.trials, t.errors());
            }
            if (!sim_json.empty())
                write_json(sh::report_to_json(report), sim_json);
        } else if (render->parsed()) {
            const sh::SceneObject* obj = scene->find(object_id);
            if (!obj)
                throw sh::Error("unknown object id '" + object_id + "'");
            if (obj->hidden)
                throw sh::Error("object '" + object_id + "' is hidden");
            const sh::HeadPose head{scene->viewpoint.position, scene->viewpoint.forward};
            const sh::CueOptions opts{config.cue_kind, snap, sh::kDefaultCueDurationS};
            const auto cue = sh::global_cue(*obj, sh::scene_stats(*scene), head, opts);
            sh::write_wav(sh::render_cue_audio(cue, *timbres), wav_out);
            if (!haptics_out.empty())
                write_json(sh::haptics_to_json(sh::render_cue_haptics(cue)), haptics_out);
            std::cout << sh::cue_to_json(cue).dump() << '\n';
        } else if (serve->parsed()) {
            // SIGINT/SIGTERM are taken synchronously by a watcher thread.
            sigset_t signals;
            sigemptyset(&signals);
            sigaddset(&signals, SIGINT);
            sigaddset(&signals, SIGTERM);
            pthread_sigmask(SIG_BLOCK, &signals, nullptr);

            sh::Server server(scene, config, timbres);
            const auto bound = server.listen(static_cast<std::uint16_t>(port), bind);
            std::thread watcher([&] {
                int sig = 0;
                sigwait(&signals, &sig);
                server.stop();
            });
            watcher.detach();
            std::cout << "listening on " << bind << ':' << bound << std::endl;
            server.run();
            server.stop();
        }
    } catch (const sh::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
