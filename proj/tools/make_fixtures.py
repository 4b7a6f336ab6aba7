#!/usr/bin/env python3
"""Regenerates the fixture scenes, textures and the replay trace under fixtures/.

Object names, materials and scene membership follow the living-room object
inventory used for the comparative selection study. Colors, sizes and
placements are illustrative. Placement uses seeded rejection sampling so that,
from the scene viewpoint, a cast of radius 0.5 aimed at any object's center
resolves to that object first.

Usage: python3 tools/make_fixtures.py [fixtures_dir]
"""
import json
import math
import random
import sys
from pathlib import Path

from PIL import Image

CAST_RADIUS = 0.5
EYE = (0.0, 1.2, 0.0)

# (description, material, scenes, extents [w,h,d] m, color rgb | texture name)
OBJECTS = [
    ("trash can", "metal", "234", (0.30, 0.40, 0.30), (150, 150, 155)),
    ("chalk board", "wood", "234", (0.60, 0.45, 0.03), (40, 55, 45)),
    ("tree photo large", "wood", "13", (0.50, 0.40, 0.03), "tree_large"),
    ("tv", "plastic", "145", (0.70, 0.42, 0.08), (25, 25, 28)),
    ("feather photo small", "wood", "345", (0.20, 0.25, 0.02), "feather"),
    ("painting black and white", "wood", "23", (0.45, 0.35, 0.03), "bw_painting"),
    ("vase white tall", "ceramic", "15", (0.14, 0.40, 0.14), (238, 236, 230)),
    ("can black", "metal", "145", (0.07, 0.12, 0.07), (20, 20, 20)),
    ("wine white and blue label", "glass", "134", (0.08, 0.31, 0.08), (205, 215, 235)),
    ("plant pot green", "ceramic", "134", (0.22, 0.20, 0.22), (60, 130, 60)),
    ("clock", "wood", "345", (0.30, 0.30, 0.05), (150, 110, 70)),
    ("toy car", "metal", "234", (0.15, 0.07, 0.08), (200, 30, 30)),
    ("fire extinguisher", "metal", "235", (0.15, 0.50, 0.15), (190, 20, 20)),
    ("laptop", "metal", "345", (0.34, 0.24, 0.23), (170, 172, 176)),
    ("coffee mug", "glass", "45", (0.10, 0.10, 0.08), (235, 230, 220)),
    ("house pink", "wood", "35", (0.16, 0.18, 0.14), (235, 150, 180)),
    ("house green", "wood", "35", (0.16, 0.18, 0.14), (110, 180, 110)),
    ("ash tray yellow", "ceramic", "145", (0.14, 0.04, 0.14), (235, 200, 40)),
    ("smartphone", "plastic", "35", (0.075, 0.15, 0.01), (35, 35, 40)),
    ("chips", "plastic", "345", (0.20, 0.28, 0.08), (220, 60, 40)),
    ("lamp white", "metal", "34", (0.30, 0.55, 0.30), (240, 240, 240)),
    ("bag black", "paper", "345", (0.32, 0.40, 0.15), (25, 25, 25)),
    ("cushion stripes", "fabric", "234", (0.45, 0.45, 0.15), "stripes"),
    ("tv remote", "plastic", "134", (0.05, 0.02, 0.18), (30, 30, 30)),
    ("tree photo small", "wood", "14", (0.20, 0.25, 0.02), "tree_small"),
    ("person photo", "wood", "14", (0.20, 0.25, 0.02), "person"),
    ("bottle black tall", "ceramic", "13", (0.08, 0.32, 0.08), (15, 15, 15)),
    ("bottle gray short", "ceramic", "15", (0.09, 0.20, 0.09), (128, 128, 128)),
    ("dvd player", "plastic", "24", (0.43, 0.07, 0.25), (45, 45, 48)),
    ("speaker", "wood", "124", (0.22, 0.38, 0.25), (90, 60, 40)),
    ("vase yellow and blue", "ceramic", "12", (0.16, 0.30, 0.16), (200, 180, 80)),
    ("lamp yellow", "wood", "125", (0.30, 0.55, 0.30), (240, 210, 80)),
    ("cushion flowers", "fabric", "12", (0.45, 0.45, 0.15), "flowers"),
    ("bottle white tall", "ceramic", "15", (0.08, 0.32, 0.08), (240, 240, 238)),
    ("bottle gray tall", "ceramic", "12", (0.08, 0.32, 0.08), (130, 130, 130)),
    ("wine beige label", "glass", "13", (0.08, 0.31, 0.08), (215, 200, 165)),
    ("can white", "metal", "15", (0.07, 0.12, 0.07), (242, 242, 242)),
    ("laundry basket", "fabric", "25", (0.50, 0.40, 0.35), (200, 185, 150)),
    ("tin container black", "metal", "25", (0.12, 0.15, 0.12), (22, 22, 22)),
    ("tin container green", "metal", "124", (0.12, 0.15, 0.12), (40, 120, 60)),
    ("tin container white", "metal", "24", (0.12, 0.15, 0.12), (238, 238, 238)),
    ("metal clock", "metal", "12", (0.28, 0.28, 0.05), (180, 182, 185)),
    ("lamp black", "wood", "23", (0.30, 0.55, 0.30), (20, 20, 20)),
    ("vase black tall", "ceramic", "25", (0.14, 0.40, 0.14), (18, 18, 18)),
    ("vase white short", "ceramic", "25", (0.16, 0.22, 0.16), (238, 236, 230)),
    ("vase silver", "ceramic", "123", (0.14, 0.30, 0.14), (192, 192, 196)),
    ("vase gold", "ceramic", "25", (0.14, 0.30, 0.14), (212, 175, 55)),
    ("flower painting", "wood", "25", (0.50, 0.40, 0.03), "flower_painting"),
    ("box blue", "fabric", "12", (0.35, 0.25, 0.30), (40, 70, 170)),
    ("pot red", "ceramic", "34", (0.22, 0.20, 0.22), (180, 40, 30)),
]


def slug(desc):
    return desc.replace(" ", "-")


def make_texture(name, path, rng):
    size = 32
    img = Image.new("RGB", (size, size))
    px = img.load()
    for y in range(size):
        for x in range(size):
            if name == "stripes":
                c = (230, 230, 220) if (x // 4) % 2 == 0 else (40, 60, 140)
            elif name == "bw_painting":
                c = (255, 255, 255) if (x // 8 + y // 8) % 2 == 0 else (0, 0, 0)
            elif name in ("tree_large", "tree_small"):
                g = 80 + (y * 4) % 120
                c = (60, g, 50) if y > 8 else (150, 200, 235)
            elif name == "feather":
                v = 180 + (x * 2) % 70
                c = (v, v, v - 10)
            elif name == "person":
                c = (200, 160, 130) if (x - 16) ** 2 + (y - 12) ** 2 < 60 else (70, 80, 110)
            else:  # flowers / flower_painting
                c = (rng.randrange(150, 256), rng.randrange(40, 200), rng.randrange(40, 200))
            px[x, y] = c
    img.save(path)


# Rounded-box cast: first t >= 0 where the distance from the ray point to the
# box drops to the cast radius. The distance along a ray is convex in t.
def box_dist(p, c, half):
    s = 0.0
    for i in range(3):
        d = max(abs(p[i] - c[i]) - half[i], 0.0)
        s += d * d
    return math.sqrt(s)


def cast_entry(o, d, c, half, r, tmax=50.0):
    f = lambda t: box_dist([o[i] + t * d[i] for i in range(3)], c, half) - r
    if f(0.0) <= 0:
        return 0.0
    lo, hi = 0.0, tmax
    for _ in range(120):
        m1, m2 = lo + (hi - lo) / 3, hi - (hi - lo) / 3
        if f(m1) < f(m2):
            hi = m2
        else:
            lo = m1
    tmin = 0.5 * (lo + hi)
    if f(tmin) > 0:
        return None
    lo, hi = 0.0, tmin
    for _ in range(80):
        m = 0.5 * (lo + hi)
        if f(m) <= 0:
            hi = m
        else:
            lo = m
    return hi


def first_hit(placed, target_idx):
    c = placed[target_idx]["center"]
    d = [c[i] - EYE[i] for i in range(3)]
    n = math.sqrt(sum(v * v for v in d))
    d = [v / n for v in d]
    best, best_t = None, None
    for j, ob in enumerate(placed):
        t = cast_entry(EYE, d, ob["center"], ob["half"], CAST_RADIUS)
        if t is not None and (best_t is None or t < best_t):
            best, best_t = j, t
    return best


def layout(objs, rng):
    placed = []
    for ob in objs:
        for _ in range(5000):
            w, h, dp = ob["extents"]
            x = rng.uniform(-3.2, 3.2)
            z = rng.uniform(3.0, 4.6)
            y = rng.uniform(0.1, 2.6) + h / 2
            cand = {"center": [x, y, z], "half": [w / 2, h / 2, dp / 2]}
            trial = placed + [cand]
            if all(first_hit(trial, i) == i for i in range(len(trial))):
                placed.append(cand)
                break
        else:
            raise RuntimeError("placement failed for " + ob["id"])
    return placed


def main():
    root = Path(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "fixtures")
    (root / "scenes").mkdir(parents=True, exist_ok=True)
    (root / "textures").mkdir(parents=True, exist_ok=True)
    (root / "traces").mkdir(parents=True, exist_ok=True)
    tex_rng = random.Random(7)
    for desc, _, _, _, color in OBJECTS:
        if isinstance(color, str):
            p = root / "textures" / (color + ".png")
            if not p.exists():
                make_texture(color, p, tex_rng)

    scenes = {}
    for s in range(1, 6):
        rng = random.Random(1000 + s)
        objs = []
        for desc, mat, members, ext, color in OBJECTS:
            if str(s) not in members:
                continue
            objs.append({"id": slug(desc), "name": desc, "material": mat, "extents": ext, "color": color})
        placed = layout(objs, rng)
        out = []
        for ob, pl in zip(objs, placed):
            color = ob["color"]
            col = {"texture": "../textures/" + color + ".png"} if isinstance(color, str) else {"rgb": list(color)}
            center = [round(v, 3) for v in pl["center"]]
            out.append({
                "id": ob["id"], "name": ob["name"],
                "position": center,
                "bbox": {"center": center, "extents": list(ob["extents"])},
                "material": ob["material"], "color": col, "hidden": False,
            })
        scene = {"version": 1, "name": "living-room-%d" % s,
                 "viewpoint": {"position": list(EYE), "forward": [0.0, 0.0, 1.0]},
                 "objects": out}
        scenes[s] = scene
        (root / "scenes" / ("living-room-%d.json" % s)).write_text(json.dumps(scene, indent=2) + "\n")

    write_trace(root / "traces" / "living-room-1.trace.jsonl", scenes[1])


def write_trace(path, scene):
    """500-line scripted session: sweeps, local-mode holds and selections."""
    rng = random.Random(42)
    objs = scene["objects"]
    lines = []
    t = 0.0

    def gaze(target, jitter):
        nonlocal t
        t = round(t + 1 / 60, 6)
        c = target["position"] if target else [rng.uniform(-8, 8), rng.uniform(4, 8), 4.0]
        d = [c[i] - EYE[i] + rng.gauss(0, jitter) for i in range(3)]
        n = math.sqrt(sum(v * v for v in d))
        yaw = rng.uniform(-0.2, 0.2)
        fwd = [math.sin(yaw), 0.0, math.cos(yaw)]
        return {"t": t, "eye_origin": list(EYE), "eye_dir": [round(v / n, 9) for v in d],
                "head_forward": [round(v, 9) for v in fwd], "head_pos": list(EYE)}

    def cmd(name):
        return {"cmd": name, "t": t}

    lines.append(cmd("activate"))
    while len(lines) < 499:
        target = rng.choice(objs) if rng.random() > 0.1 else None
        for _ in range(rng.randint(3, 12)):
            lines.append(gaze(target, 0.01))
        r = rng.random()
        if r < 0.15:
            lines.append(cmd("enter_local"))
        elif r < 0.3:
            lines.append(cmd("exit_local"))
        elif r < 0.4:
            lines.append(cmd("select"))
        elif r < 0.42:
            lines.append(cmd("deactivate"))
            lines.append(cmd("activate"))
    lines = lines[:499]
    lines.append(cmd("deactivate"))
    path.write_text("".join(json.dumps(l) + "\n" for l in lines))


if __name__ == "__main__":
    main()
