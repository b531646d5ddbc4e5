"""Scene and map serialization.

Scene JSON (schema "cspace-scene/1"): named polygonal objects, optional
obstacle groups, an optional container designation, and numeric config.
Rings are coordinate lists ``[[x, y], ...]``; within an object the first ring
(and any later plain ring) opens a new polygon, while ``{"hole": true,
"points": [...]}`` entries attach holes to the polygon opened most recently.

Map JSON (schema "cspace-map/1") mirrors RegionNR: area rings, per-edge flag
runs, isolated features and cracks, diagnostics.
"""

import json
from dataclasses import dataclass, field

from .errors import InvalidRingError, SceneError
from .geom import MultiPolygon
from .region import BoundaryPiece, Flag, FreeFeature, RegionNR

SCENE_SCHEMA = "cspace-scene/1"
MAP_SCHEMA = "cspace-map/1"


@dataclass(frozen=True)
class SceneConfig:
    eps: float = 1e-9
    eps_cmp: float = 1e-7
    disk_segments: int = 64
    window: tuple[float, float, float, float] | None = None


@dataclass(frozen=True)
class Scene:
    objects: dict[str, MultiPolygon]
    groups: dict[str, tuple[str, ...]] = field(default_factory=dict)
    container: str | None = None
    config: SceneConfig = field(default_factory=SceneConfig)

    def object(self, name: str) -> MultiPolygon:
        return self.objects[name]


def _require(cond: bool, message: str, pointer: str):
    if not cond:
        raise SceneError(message, pointer)


def _parse_rings(entry, pointer: str) -> MultiPolygon:
    _require(isinstance(entry, dict) and "rings" in entry,
             "object must be {'rings': [...]}", pointer)
    rings = entry["rings"]
    _require(isinstance(rings, list) and rings, "rings must be a non-empty list",
             pointer + "/rings")
    polygons: list[tuple[list, list]] = []
    for i, ring in enumerate(rings):
        rp = f"{pointer}/rings/{i}"
        if isinstance(ring, dict):
            pts = ring.get("points")
            hole = bool(ring.get("hole", False))
        else:
            pts = ring
            hole = False
        _require(isinstance(pts, list) and all(
            isinstance(c, (list, tuple)) and len(c) == 2 for c in pts),
            "ring must be a list of [x, y] pairs", rp)
        _require(len(pts) >= 3, "ring needs at least 3 vertices", rp)
        if hole:
            _require(bool(polygons), "hole ring before any outer ring", rp)
            polygons[-1][1].append(pts)
        else:
            polygons.append((pts, []))
        try:
            for c in pts:
                float(c[0]), float(c[1])
        except (TypeError, ValueError):
            raise SceneError("non-numeric coordinate", rp)
    try:
        return MultiPolygon.from_polygons(polygons)
    except InvalidRingError as exc:
        raise SceneError(f"invalid ring: {exc}", pointer) from exc


def scene_from_json(data: dict) -> Scene:
    _require(isinstance(data, dict), "scene must be a JSON object", "")
    version = data.get("version", SCENE_SCHEMA)
    _require(version == SCENE_SCHEMA, f"unsupported scene version {version!r}", "/version")
    raw_objects = data.get("objects")
    _require(isinstance(raw_objects, dict) and raw_objects,
             "scene needs a non-empty 'objects' map", "/objects")
    objects = {}
    for name, entry in raw_objects.items():
        objects[name] = _parse_rings(entry, f"/objects/{name}")

    groups: dict[str, tuple[str, ...]] = {}
    for gname, members in (data.get("groups") or {}).items():
        gp = f"/groups/{gname}"
        _require(isinstance(members, list) and members, "group must list members", gp)
        _require(gname not in objects, f"group name {gname!r} collides with an object", gp)
        for m in members:
            _require(m in objects, f"group member {m!r} is not an object", gp)
        groups[gname] = tuple(members)

    container = data.get("container")
    if container is not None:
        _require(container in objects, f"container {container!r} is not an object",
                 "/container")

    cfg = data.get("config") or {}
    window = cfg.get("window")
    if window is not None:
        _require(isinstance(window, list) and len(window) == 4,
                 "window must be [xmin, ymin, xmax, ymax]", "/config/window")
        window = tuple(float(v) for v in window)
    config = SceneConfig(
        eps=float(cfg.get("eps", 1e-9)),
        eps_cmp=float(cfg.get("eps_cmp", 1e-7)),
        disk_segments=int(cfg.get("disk_segments", 64)),
        window=window,
    )
    return Scene(objects, groups, container, config)


def load_scene(path: str) -> Scene:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SceneError(f"not valid JSON: {exc}", "") from exc
    return scene_from_json(data)


def scene_to_json(scene: Scene) -> dict:
    objects = {}
    for name, mp in scene.objects.items():
        rings = []
        for outer, holes in mp.polys:
            rings.append([[p.x, p.y] for p in outer.points])
            for h in holes:
                rings.append({"hole": True, "points": [[p.x, p.y] for p in h.points]})
        objects[name] = {"rings": rings}
    data: dict = {"version": SCENE_SCHEMA, "objects": objects}
    if scene.groups:
        data["groups"] = {g: list(ms) for g, ms in scene.groups.items()}
    if scene.container:
        data["container"] = scene.container
    cfg: dict = {
        "eps": scene.config.eps,
        "eps_cmp": scene.config.eps_cmp,
        "disk_segments": scene.config.disk_segments,
    }
    if scene.config.window:
        cfg["window"] = list(scene.config.window)
    data["config"] = cfg
    return data


def save_scene(scene: Scene, path: str):
    with open(path, "w") as fh:
        json.dump(scene_to_json(scene), fh, indent=2, sort_keys=True)
        fh.write("\n")


# ---------------------------------------------------------------------------
# Map output


def map_to_json(region: RegionNR) -> dict:
    area = []
    for outer, holes in region.area.polys:
        area.append({
            "outer": [[p.x, p.y] for p in outer.points],
            "holes": [[[p.x, p.y] for p in h.points] for h in holes],
        })
    edges = [
        {
            "a": list(p.a),
            "b": list(p.b),
            "flag": p.flag.value,
            **({"synthetic": True} if p.synthetic else {}),
        }
        for p in region.pieces
    ]
    feats = [{"kind": f.kind, "points": [list(p) for p in f.points]}
             for f in region.features]
    cracks = [{"kind": c.kind, "points": [list(p) for p in c.points]}
              for c in region.cracks]
    data = {
        "version": MAP_SCHEMA,
        "area": area,
        "edges": edges,
        "features": feats,
        "cracks": cracks,
        "diagnostics": list(region.diagnostics),
    }
    if region.window:
        data["window"] = list(region.window)
    return data


def save_map(region: RegionNR, path: str):
    with open(path, "w") as fh:
        json.dump(map_to_json(region), fh, indent=2, sort_keys=True)
        fh.write("\n")


def map_from_json(data: dict) -> RegionNR:
    _require(data.get("version") == MAP_SCHEMA,
             f"unsupported map version {data.get('version')!r}", "/version")
    polys = [(entry["outer"], entry.get("holes", [])) for entry in data.get("area", [])]
    area = MultiPolygon.from_polygons(polys) if polys else MultiPolygon.empty()
    pieces = tuple(
        BoundaryPiece(tuple(e["a"]), tuple(e["b"]), Flag(e["flag"]),
                      bool(e.get("synthetic", False)))
        for e in data.get("edges", [])
    )
    feats = tuple(FreeFeature(f["kind"], tuple(map(tuple, f["points"])))
                  for f in data.get("features", []))
    cracks = tuple(FreeFeature(c["kind"], tuple(map(tuple, c["points"])))
                   for c in data.get("cracks", []))
    window = tuple(data["window"]) if "window" in data else None
    return RegionNR(area, pieces, feats, cracks, window,
                    tuple(data.get("diagnostics", [])))


def load_map(path: str) -> RegionNR:
    with open(path) as fh:
        data = json.load(fh)
    return map_from_json(data)
