#include "test_support.hpp"

#include <sonohaptics/engine.hpp>
#include <sonohaptics/error.hpp>
#include <sonohaptics/events.hpp>

#include <doctest.h>

using namespace sonohaptics;

namespace {

// Three objects in a row 0.4 m apart plus a far one.
Scene row_scene()
{
    Scene scene;
    scene.name = "row";
    scene.objects.push_back(test::make_object("dark", {-0.4, 1.2, 3.0}, {0.2, 0.2, 0.2}, {30, 30, 30}));
    scene.objects.push_back(test::make_object("mid", {0.0, 1.2, 3.0}, {0.3, 0.3, 0.2}, {128, 128, 128}));
    scene.objects.push_back(test::make_object("light", {0.4, 1.2, 3.0}, {0.1, 0.1, 0.2}, {230, 230, 230}));
    scene.objects.push_back(test::make_object("far", {3.0, 1.2, 3.0}, {0.5, 0.5, 0.5}, {200, 20, 20}));
    return scene;
}

GazeSample look_at(const Scene& scene, std::string_view id, double t)
{
    const Vec3 eye{0.0, 1.2, 0.0};
    GazeSample s;
    s.t = t;
    s.eye_origin = eye;
    s.head_pos = eye;
    s.head_forward = {0.0, 0.0, 1.0};
    s.eye_dir = normalized(scene.find(id)->bbox.center - eye);
    return s;
}

GazeSample look_away(double t)
{
    GazeSample s;
    s.t = t;
    s.eye_origin = {0.0, 1.2, 0.0};
    s.head_pos = s.eye_origin;
    s.eye_dir = {0.0, 0.0, -1.0};
    return s;
}

template <class T>
const T& as(const EngineEvent& e)
{
    REQUIRE(std::holds_alternative<T>(e.payload));
    return std::get<T>(e.payload);
}

} // namespace

TEST_CASE("activation is idempotent")
{
    Engine engine(row_scene(), {0.05});
    CHECK(engine.mode() == Mode::idle);
    CHECK(engine.activate(0.0).size() == 1);
    CHECK(engine.activate(0.1).empty());
    CHECK(engine.mode() == Mode::global);
    CHECK(engine.deactivate(0.2).size() == 1);
    CHECK(engine.deactivate(0.3).empty());
    CHECK(engine.mode() == Mode::idle);
}

TEST_CASE("idle engine ignores gaze and selection")
{
    const Scene scene = row_scene();
    Engine engine(scene, {0.05});
    CHECK(engine.step(look_at(scene, "mid", 0.0)).empty());
    CHECK(engine.confirm_selection(0.1).empty());
    CHECK_FALSE(engine.hovered());
    CHECK_THROWS_AS(engine.enter_local(0.2), EngineError);
}

TEST_CASE("hover is edge-triggered")
{
    const Scene scene = row_scene();
    Engine engine(scene, {0.05});
    engine.activate(0.0);

    auto ev = engine.step(look_at(scene, "mid", 0.1));
    REQUIRE(ev.size() == 1);
    CHECK(as<event::HoverEnter>(ev[0]).object == "mid");
    CHECK(ev[0].t == 0.1);

    SUBCASE("dwelling emits nothing")
    {
        for (int i = 0; i < 10; ++i)
            CHECK(engine.step(look_at(scene, "mid", 0.2 + 0.01 * i)).empty());
    }
    SUBCASE("switching emits exit then enter")
    {
        ev = engine.step(look_at(scene, "light", 0.3));
        REQUIRE(ev.size() == 2);
        CHECK(as<event::HoverExit>(ev[0]).object == "mid");
        CHECK(as<event::HoverEnter>(ev[1]).object == "light");
    }
    SUBCASE("looking away emits only exit")
    {
        ev = engine.step(look_away(0.3));
        REQUIRE(ev.size() == 1);
        CHECK(as<event::HoverExit>(ev[0]).object == "mid");
        CHECK_FALSE(engine.hovered());
        CHECK(engine.last_gazed() == "mid");
        CHECK(engine.step(look_away(0.4)).empty());
    }
}

TEST_CASE("global hover carries the global cue")
{
    const Scene scene = row_scene();
    Engine engine(scene, {0.05});
    engine.activate(0.0);
    const auto ev = engine.step(look_at(scene, "light", 0.1));
    const auto& cue = as<event::HoverEnter>(ev[0]).cue;
    const HeadPose head{{0.0, 1.2, 0.0}, {0.0, 0.0, 1.0}};
    CHECK(cue == global_cue(scene.objects[2], scene_stats(scene), head));
    CHECK(cue.pan > 0.0);
}

TEST_CASE("enter_local freezes the cluster around the last gazed object")
{
    const Scene scene = row_scene();
    Engine engine(scene, {0.05, 1.0});
    engine.activate(0.0);

    SUBCASE("no anchor yet")
    {
        CHECK_THROWS_AS(engine.enter_local(0.1), EngineError);
        CHECK(engine.mode() == Mode::global);
    }
    SUBCASE("cluster of three")
    {
        engine.step(look_at(scene, "mid", 0.1));
        const auto ev = engine.enter_local(0.2);
        REQUIRE(ev.size() == 1);
        const auto& mc = as<event::ModeChanged>(ev[0]);
        CHECK(mc.mode == Mode::local);
        REQUIRE(mc.local);
        CHECK(mc.local->anchor == "mid");
        const auto& a = mc.local->assignments;
        REQUIRE(a.size() == 3);
        CHECK(a.at("dark").pitch_hz == 130.81);
        CHECK(a.at("mid").pitch_hz == doctest::Approx(559.29).epsilon(1e-12));
        CHECK(a.at("light").pitch_hz == 987.77);
        CHECK(a.at("light").amplitude == 0.125);
        CHECK(a.at("mid").amplitude == 1.0);

        CHECK(engine.enter_local(0.3).empty());

        // Hover cues use the frozen values with live pan.
        auto hv = engine.step(look_at(scene, "light", 0.4));
        const auto& cue = as<event::HoverEnter>(hv.back()).cue;
        CHECK(cue.pitch_hz == 987.77);
        CHECK(cue.amplitude == 0.125);
        CHECK(cue.pan > 0.0);

        GazeSample turned = look_at(scene, "dark", 0.5);
        turned.head_forward = normalized(Vec3{-1.0, 0.0, 1.0});
        hv = engine.step(turned);
        const auto& dark = as<event::HoverEnter>(hv.back()).cue;
        CHECK(dark.pitch_hz == 130.81);
        CHECK(dark.pan > 0.0); // head turned past it to the left

        // Objects outside the cluster are silent.
        hv = engine.step(look_at(scene, "far", 0.6));
        CHECK(as<event::HoverEnter>(hv.back()).cue.kind == CueKind::silent);

        // Leaving local mode restores global cues.
        const auto ex = engine.exit_local(0.7);
        REQUIRE(ex.size() == 1);
        CHECK(as<event::ModeChanged>(ex[0]).mode == Mode::global);
        CHECK_FALSE(as<event::ModeChanged>(ex[0]).local);
        CHECK(engine.exit_local(0.8).empty());
        hv = engine.step(look_at(scene, "light", 0.9));
        CHECK(as<event::HoverEnter>(hv.back()).cue.pitch_hz < 761.56);
    }
    SUBCASE("isolated anchor gets the midpoints")
    {
        engine.step(look_at(scene, "far", 0.1));
        const auto ev = engine.enter_local(0.2);
        const auto& a = as<event::ModeChanged>(ev[0]).local->assignments;
        REQUIRE(a.size() == 1);
        CHECK(a.at("far").pitch_hz == doctest::Approx(559.29).epsilon(1e-12));
        CHECK(a.at("far").amplitude == 0.5625);
    }
    SUBCASE("deactivate clears the anchor")
    {
        engine.step(look_at(scene, "mid", 0.1));
        engine.enter_local(0.2);
        engine.deactivate(0.3);
        CHECK_FALSE(engine.local_cluster());
        CHECK_FALSE(engine.last_gazed());
        engine.activate(0.4);
        CHECK(engine.mode() == Mode::global);
        CHECK_THROWS_AS(engine.enter_local(0.5), EngineError);
    }
}

TEST_CASE("selection")
{
    const Scene scene = row_scene();
    Engine engine(scene, {0.05});
    engine.activate(0.0);
    auto ev = engine.confirm_selection(0.1);
    REQUIRE(ev.size() == 1);
    CHECK_FALSE(as<event::SelectionConfirmed>(ev[0]).object);
    engine.step(look_at(scene, "dark", 0.2));
    ev = engine.confirm_selection(0.3);
    CHECK(as<event::SelectionConfirmed>(ev[0]).object == "dark");
    // Selection does not change mode or hover.
    CHECK(engine.mode() == Mode::global);
    CHECK(engine.hovered() == "dark");
}

TEST_CASE("static baseline cues ignore visual properties")
{
    const Scene scene = row_scene();
    Engine engine(scene, {0.05, 1.0, CueKind::static_tone});
    engine.activate(0.0);
    for (const char* id : {"dark", "mid", "light", "far"}) {
        const auto ev = engine.step(look_at(scene, id, 0.1));
        const auto& cue = as<event::HoverEnter>(ev.back()).cue;
        CHECK(cue.kind == CueKind::static_tone);
        CHECK(cue.pitch_hz == 220.0);
        CHECK(cue.duration_s == 0.2);
    }
    engine.step(look_at(scene, "mid", 0.2));
    engine.enter_local(0.3);
    const auto ev = engine.step(look_at(scene, "light", 0.4));
    CHECK(as<event::HoverEnter>(ev.back()).cue.pitch_hz == 220.0);
}

TEST_CASE("gaze sample validation")
{
    GazeSample s = look_away(0.0);
    CHECK_NOTHROW(validate(s));
    s.eye_dir = {0.0, 0.0, 2.0};
    CHECK_THROWS_AS(validate(s), EngineError);
    s.eye_dir = {0.0, 0.0, 1.0};
    s.head_forward = {0.0, 0.0, 0.0};
    CHECK_THROWS_AS(validate(s), EngineError);
    CHECK_THROWS_AS(Engine(row_scene(), {0.0}), EngineError);
}

TEST_CASE("random command sequences keep events well formed")
{
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_int_distribution<int> op(0, 9);
    for (int run = 0; run < 40; ++run) {
        const Scene scene = test::random_scene(rng, 3 + run % 10);
        Engine engine(scene);
        std::optional<std::string> hovered;
        Mode mode = Mode::idle;
        double t = 0.0;
        for (int i = 0; i < 300; ++i) {
            t += 0.01;
            Events ev;
            switch (op(rng)) {
            case 0: ev = engine.activate(t); break;
            case 1: ev = engine.deactivate(t); break;
            case 2:
                try {
                    ev = engine.enter_local(t);
                } catch (const EngineError&) {
                    CHECK((engine.mode() == Mode::idle || !engine.last_gazed()));
                }
                break;
            case 3: ev = engine.exit_local(t); break;
            case 4: ev = engine.confirm_selection(t); break;
            default: {
                GazeSample s;
                s.t = t;
                s.eye_dir = normalized(Vec3{u(rng) * 0.6, u(rng) * 0.6, 1.0});
                ev = engine.step(s);
            }
            }
            for (const auto& e : ev) {
                CHECK(e.t == t);
                CHECK_NOTHROW(event_to_json(e));
                std::visit(
                    [&](const auto& p) {
                        using P = std::decay_t<decltype(p)>;
                        if constexpr (std::is_same_v<P, event::HoverEnter>) {
                            CHECK_FALSE(hovered);
                            CHECK(mode != Mode::idle);
                            CHECK_NOTHROW(validate(p.cue));
                            hovered = p.object;
                        } else if constexpr (std::is_same_v<P, event::HoverExit>) {
                            CHECK(hovered == p.object);
                            hovered.reset();
                        } else if constexpr (std::is_same_v<P, event::Activated>) {
                            CHECK(mode == Mode::idle);
                            mode = Mode::global;
                        } else if constexpr (std::is_same_v<P, event::Deactivated>) {
                            CHECK(mode != Mode::idle);
                            mode = Mode::idle;
                            hovered.reset();
                        } else if constexpr (std::is_same_v<P, event::ModeChanged>) {
                            CHECK(p.local.has_value() == (p.mode == Mode::local));
                            CHECK(mode != p.mode);
                            mode = p.mode;
                        } else if constexpr (std::is_same_v<P, event::SelectionConfirmed>) {
                            CHECK(p.object == hovered);
                        }
                    },
                    e.payload);
            }
            CHECK(engine.mode() == mode);
            CHECK(engine.hovered() == hovered);
        }
    }
}
