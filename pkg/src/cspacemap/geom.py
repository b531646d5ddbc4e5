"""Planar polygon kernel: points, rings, regular regions, transforms,
point classification, regularized Booleans, hulls, and enclosing/inscribed circles.

All values are immutable after construction and every operation is a pure
function, so the module is safe to use from multiple threads without locks.
Coordinates are IEEE doubles; a single tolerance ``EPS`` (default 1e-9 scene
units) governs vertex welding, ON-classification, and regularization cleanup.
"""

import math
import random
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np
import shapely

from .errors import EmptyInputError, InvalidRingError

EPS = 1e-9

# Relative threshold below which three consecutive vertices count as collinear.
_COLLINEAR_REL = 1e-12


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite point ({self.x}, {self.y})")

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Point":
        return Point(-self.x, -self.y)

    def scaled(self, s: float) -> "Point":
        return Point(self.x * s, self.y * s)

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def dist(self, other: "Point") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def as_tuple(self) -> tuple[float, float]:
        return (self.x, self.y)


ORIGIN = Point(0.0, 0.0)


class PointClass(Enum):
    IN = "IN"
    ON = "ON"
    OUT = "OUT"


class BoolOp(Enum):
    UNION = "UNION"
    INTERSECT = "INTERSECT"
    DIFF = "DIFF"


def _weld(coords: list[tuple[float, float]], eps: float) -> list[tuple[float, float]]:
    """Drop consecutive vertices closer than eps (cyclically)."""
    out: list[tuple[float, float]] = []
    for c in coords:
        if out and math.hypot(c[0] - out[-1][0], c[1] - out[-1][1]) < eps:
            continue
        out.append(c)
    while len(out) >= 2 and math.hypot(out[0][0] - out[-1][0], out[0][1] - out[-1][1]) < eps:
        out.pop()
    return out


def _drop_collinear(coords: list[tuple[float, float]]) -> list[tuple[float, float]]:
    """Remove vertices whose adjacent edges are (numerically) collinear."""
    changed = True
    while changed and len(coords) > 3:
        changed = False
        kept = []
        n = len(coords)
        for i in range(n):
            a = coords[i - 1]
            b = coords[i]
            c = coords[(i + 1) % n]
            ux, uy = b[0] - a[0], b[1] - a[1]
            vx, vy = c[0] - b[0], c[1] - b[1]
            cross = ux * vy - uy * vx
            lim = _COLLINEAR_REL * math.hypot(ux, uy) * math.hypot(vx, vy)
            # Only drop vertices that do not bend the boundary; a spike
            # (edges folding back, dot < 0) is kept for the validity check.
            if abs(cross) <= lim and ux * vx + uy * vy >= 0:
                changed = True
                continue
            kept.append(b)
        coords = kept
        if len(coords) < 3:
            break
    return coords


def _ring_area(coords: Sequence[tuple[float, float]]) -> float:
    s = 0.0
    n = len(coords)
    for i in range(n):
        x0, y0 = coords[i]
        x1, y1 = coords[(i + 1) % n]
        s += x0 * y1 - x1 * y0
    return 0.5 * s


@dataclass(frozen=True)
class Ring:
    """A simple closed polygonal loop. Orientation encodes its role:
    counter-clockwise (positive area) for outers, clockwise for holes."""

    points: tuple[Point, ...]

    @classmethod
    def from_coords(cls, coords: Iterable[Sequence[float]], weld_eps: float = EPS) -> "Ring":
        raw = [(float(x), float(y)) for x, y in coords]
        welded = _weld(raw, weld_eps)
        welded = _drop_collinear(welded)
        if len(welded) < 3:
            raise InvalidRingError(
                f"ring has {len(welded)} distinct vertices after welding; need at least 3"
            )
        if _ring_area(welded) == 0.0:
            raise InvalidRingError("ring has zero area")
        return cls(tuple(Point(x, y) for x, y in welded))

    @property
    def signed_area(self) -> float:
        return _ring_area([p.as_tuple() for p in self.points])

    def coords(self) -> list[tuple[float, float]]:
        return [p.as_tuple() for p in self.points]

    def reversed(self) -> "Ring":
        return Ring(tuple(reversed(self.points)))

    def oriented(self, ccw: bool) -> "Ring":
        if (self.signed_area > 0) == ccw:
            return self
        return self.reversed()


@dataclass(frozen=True)
class MultiPolygon:
    """A closed regular planar region: outer rings plus hole rings.

    ``polys`` groups each outer ring (CCW) with its holes (CW). The region
    always equals the closure of its interior; regularization is idempotent
    on valid instances.
    """

    polys: tuple[tuple[Ring, tuple[Ring, ...]], ...]

    # -- construction ------------------------------------------------------

    @classmethod
    def empty(cls) -> "MultiPolygon":
        return cls(())

    @classmethod
    def from_polygons(
        cls,
        polygons: Iterable[tuple[Iterable[Sequence[float]], Iterable[Iterable[Sequence[float]]]]],
        weld_eps: float = EPS,
        validate: bool = True,
    ) -> "MultiPolygon":
        polys = []
        for outer_coords, hole_list in polygons:
            outer = Ring.from_coords(outer_coords, weld_eps).oriented(ccw=True)
            holes = tuple(
                Ring.from_coords(h, weld_eps).oriented(ccw=False) for h in hole_list
            )
            polys.append((outer, holes))
        mp = cls(tuple(polys))
        if validate and polys:
            geom = mp.shapely
            if not shapely.is_valid(geom):
                raise InvalidRingError(
                    f"invalid region: {shapely.is_valid_reason(geom)}"
                )
        return mp

    @classmethod
    def from_coords(cls, coords: Iterable[Sequence[float]], weld_eps: float = EPS) -> "MultiPolygon":
        return cls.from_polygons([(coords, [])], weld_eps)

    @classmethod
    def box(cls, x0: float, y0: float, x1: float, y1: float) -> "MultiPolygon":
        if x1 <= x0 or y1 <= y0:
            raise InvalidRingError(f"degenerate box ({x0},{y0},{x1},{y1})")
        return cls.from_coords([(x0, y0), (x1, y0), (x1, y1), (x0, y1)])

    @classmethod
    def from_shapely(cls, geom) -> "MultiPolygon":
        return _regularize(geom)

    # -- derived values ----------------------------------------------------

    @cached_property
    def shapely(self):
        if not self.polys:
            return shapely.Polygon()
        parts = [
            shapely.Polygon(outer.coords(), [h.coords() for h in holes])
            for outer, holes in self.polys
        ]
        if len(parts) == 1:
            return parts[0]
        return shapely.MultiPolygon(parts)

    @property
    def is_empty(self) -> bool:
        return not self.polys

    @cached_property
    def area(self) -> float:
        return sum(
            outer.signed_area + sum(h.signed_area for h in holes)
            for outer, holes in self.polys
        )

    @cached_property
    def bounds(self) -> tuple[float, float, float, float]:
        if self.is_empty:
            raise EmptyInputError("empty region has no bounds")
        xs = [p.x for p in self.vertices()]
        ys = [p.y for p in self.vertices()]
        return (min(xs), min(ys), max(xs), max(ys))

    def rings(self) -> Iterator[Ring]:
        for outer, holes in self.polys:
            yield outer
            yield from holes

    def vertices(self) -> Iterator[Point]:
        for ring in self.rings():
            yield from ring.points

    def vertex_array(self) -> np.ndarray:
        return np.array([p.as_tuple() for p in self.vertices()], dtype=float)

    def diameter(self) -> float:
        if self.is_empty:
            return 0.0
        hull = np.array([p.as_tuple() for p in extreme_points(self)])
        dx = hull[:, None, 0] - hull[None, :, 0]
        dy = hull[:, None, 1] - hull[None, :, 1]
        return float(np.max(np.hypot(dx, dy)))

    # -- transforms --------------------------------------------------------

    def translated(self, t: Point) -> "MultiPolygon":
        def mv(r: Ring) -> Ring:
            return Ring(tuple(p + t for p in r.points))

        return MultiPolygon(
            tuple((mv(o), tuple(mv(h) for h in hs)) for o, hs in self.polys)
        )

    def rotated(self, theta: float) -> "MultiPolygon":
        c, s = math.cos(theta), math.sin(theta)

        def rot(p: Point) -> Point:
            return Point(c * p.x - s * p.y, s * p.x + c * p.y)

        def mv(r: Ring) -> Ring:
            return Ring(tuple(rot(p) for p in r.points))

        return MultiPolygon(
            tuple((mv(o), tuple(mv(h) for h in hs)) for o, hs in self.polys)
        )


@dataclass(frozen=True)
class Transform:
    """Rigid motion: rotation about the origin followed by a translation."""

    theta: float = 0.0
    shift: Point = ORIGIN

    def apply(self, mp: MultiPolygon) -> MultiPolygon:
        return mp.rotated(self.theta).translated(self.shift)

    def apply_point(self, p: Point) -> Point:
        c, s = math.cos(self.theta), math.sin(self.theta)
        return Point(c * p.x - s * p.y + self.shift.x, s * p.x + c * p.y + self.shift.y)


# ---------------------------------------------------------------------------
# Regularization


def _regularize(geom) -> MultiPolygon:
    """Rebuild a MultiPolygon from any shapely geometry, keeping only the
    2-dimensional part (closure of the interior). Dangling edges and isolated
    points disappear here."""
    polys = []
    for part in _iter_polygons(geom):
        try:
            outer = Ring.from_coords(part.exterior.coords)
        except InvalidRingError:
            continue
        outer = outer.oriented(ccw=True)
        holes = []
        for hole in part.interiors:
            try:
                holes.append(Ring.from_coords(hole.coords).oriented(ccw=False))
            except InvalidRingError:
                continue
        polys.append((outer, tuple(holes)))
    return MultiPolygon(tuple(polys))


def _iter_polygons(geom):
    if geom is None or geom.is_empty:
        return
    gt = geom.geom_type
    if gt == "Polygon":
        yield geom
    elif gt in ("MultiPolygon", "GeometryCollection"):
        for g in geom.geoms:
            yield from _iter_polygons(g)


def _degenerate_parts(geom) -> list:
    """Lower-dimensional leftovers (lines, points) of a Boolean result."""
    out = []
    if geom is None or geom.is_empty:
        return out
    gt = geom.geom_type
    if gt in ("LineString", "LinearRing", "Point"):
        out.append(geom)
    elif gt in ("MultiLineString", "MultiPoint", "GeometryCollection"):
        for g in geom.geoms:
            out.extend(_degenerate_parts(g))
    return out


def boolean_reg(P: MultiPolygon, Q: MultiPolygon, op: BoolOp) -> MultiPolygon:
    """Regularized Boolean operation. Tangential contact leaves no dangling
    edges or isolated points in the result; an empty result is valid."""
    a, b = P.shapely, Q.shapely
    if op is BoolOp.UNION:
        raw = a.union(b)
    elif op is BoolOp.INTERSECT:
        raw = a.intersection(b)
    elif op is BoolOp.DIFF:
        raw = a.difference(b)
    else:  # pragma: no cover - enum is closed
        raise ValueError(f"unknown op {op}")
    return _regularize(raw)


def regularize(P: MultiPolygon) -> MultiPolygon:
    """Closure-of-interior of P. Idempotent; the identity on valid regions."""
    return _regularize(P.shapely)


# ---------------------------------------------------------------------------
# Point classification


def classify_point(P: MultiPolygon, p: Point, eps: float = EPS) -> PointClass:
    """Trichotomy interior / boundary / exterior with an eps-thick boundary:
    ON iff dist(p, boundary) <= eps, IN iff strictly inside beyond eps."""
    if P.is_empty:
        return PointClass.OUT
    pt = shapely.Point(p.x, p.y)
    d = P.shapely.boundary.distance(pt)
    if d <= eps:
        return PointClass.ON
    if P.shapely.contains(pt):
        return PointClass.IN
    return PointClass.OUT


def classify_points(P: MultiPolygon, pts: np.ndarray, eps: float = EPS) -> np.ndarray:
    """Vectorized classify_point: returns int8 array, 1=IN, 0=ON, -1=OUT."""
    if P.is_empty:
        return np.full(len(pts), -1, dtype=np.int8)
    geoms = shapely.points(pts)
    boundary = P.shapely.boundary
    d = shapely.distance(boundary, geoms)
    inside = shapely.contains(P.shapely, geoms)
    out = np.where(d <= eps, 0, np.where(inside, 1, -1)).astype(np.int8)
    return out


# ---------------------------------------------------------------------------
# Reflection, hulls


def reflect(P: MultiPolygon) -> MultiPolygon:
    """Point reflection through the origin. An involution; in the plane it is
    a half-turn, so ring orientation is preserved."""

    def mv(r: Ring) -> Ring:
        return Ring(tuple(-p for p in r.points))

    return MultiPolygon(tuple((mv(o), tuple(mv(h) for h in hs)) for o, hs in P.polys))


def _hull_coords(pts: list[tuple[float, float]]) -> list[tuple[float, float]]:
    """Monotone-chain convex hull, strict turns only (collinear points dropped)."""
    pts = sorted(set(pts))
    if len(pts) == 1:
        return pts
    if len(pts) == 2:
        return pts

    def build(points):
        chain: list[tuple[float, float]] = []
        for p in points:
            while len(chain) >= 2:
                ox, oy = chain[-2]
                ax, ay = chain[-1]
                cross = (ax - ox) * (p[1] - oy) - (ay - oy) * (p[0] - ox)
                scale = math.hypot(ax - ox, ay - oy) * math.hypot(p[0] - ox, p[1] - oy)
                if cross <= _COLLINEAR_REL * scale:
                    chain.pop()
                else:
                    break
            chain.append(p)
        return chain

    lower = build(pts)
    upper = build(list(reversed(pts)))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        return pts[:2] if len(pts) >= 2 else pts
    return hull


def extreme_points(P: MultiPolygon) -> list[Point]:
    """Vertices of the convex hull (the extreme points of P), CCW."""
    if P.is_empty:
        raise EmptyInputError("extreme_points of empty region")
    hull = _hull_coords([p.as_tuple() for p in P.vertices()])
    return [Point(x, y) for x, y in hull]


def convex_hull(P: MultiPolygon) -> Ring:
    pts = extreme_points(P)
    if len(pts) < 3:
        raise InvalidRingError("hull degenerates to a point or segment")
    return Ring(tuple(pts))


def is_convex(P: MultiPolygon) -> bool:
    """True for a single hole-free polygon whose boundary only turns left."""
    if len(P.polys) != 1 or P.polys[0][1]:
        return False
    pts = [p.as_tuple() for p in P.polys[0][0].points]
    n = len(pts)
    for i in range(n):
        ax, ay = pts[i]
        bx, by = pts[(i + 1) % n]
        cx, cy = pts[(i + 2) % n]
        cross = (bx - ax) * (cy - by) - (by - ay) * (cx - bx)
        scale = math.hypot(bx - ax, by - ay) * math.hypot(cx - bx, cy - by)
        if cross < -_COLLINEAR_REL * scale:
            return False
    return True


# ---------------------------------------------------------------------------
# Smallest enclosing circle (move-to-front Welzl over the hull vertices)


def _circle_two(a, b):
    cx = (a[0] + b[0]) / 2.0
    cy = (a[1] + b[1]) / 2.0
    r = math.hypot(a[0] - b[0], a[1] - b[1]) / 2.0
    return (cx, cy, r)


def _circle_three(a, b, c):
    d = 2.0 * (a[0] * (b[1] - c[1]) + b[0] * (c[1] - a[1]) + c[0] * (a[1] - b[1]))
    if d == 0.0:
        return None
    ux = (
        (a[0] ** 2 + a[1] ** 2) * (b[1] - c[1])
        + (b[0] ** 2 + b[1] ** 2) * (c[1] - a[1])
        + (c[0] ** 2 + c[1] ** 2) * (a[1] - b[1])
    ) / d
    uy = (
        (a[0] ** 2 + a[1] ** 2) * (c[0] - b[0])
        + (b[0] ** 2 + b[1] ** 2) * (a[0] - c[0])
        + (c[0] ** 2 + c[1] ** 2) * (b[0] - a[0])
    ) / d
    r = math.hypot(a[0] - ux, a[1] - uy)
    return (ux, uy, r)


def _in_circle(circ, p, slack=1e-12) -> bool:
    cx, cy, r = circ
    return math.hypot(p[0] - cx, p[1] - cy) <= r * (1 + slack) + slack


def smallest_enclosing_circle(P: MultiPolygon) -> tuple[Point, float]:
    """Unique minimal circle containing every vertex of P."""
    if P.is_empty:
        raise EmptyInputError("smallest_enclosing_circle of empty region")
    pts = [p.as_tuple() for p in extreme_points(P)]
    rng = random.Random(0x5EC)
    rng.shuffle(pts)

    circ = None
    for i, p in enumerate(pts):
        if circ is not None and _in_circle(circ, p):
            continue
        circ = (p[0], p[1], 0.0)
        for j in range(i):
            q = pts[j]
            if _in_circle(circ, q):
                continue
            circ = _circle_two(p, q)
            for k in range(j):
                s = pts[k]
                if _in_circle(circ, s):
                    continue
                c3 = _circle_three(p, q, s)
                if c3 is not None:
                    circ = c3
    cx, cy, r = circ
    return Point(cx, cy), r


# ---------------------------------------------------------------------------
# Inradius by bisection over erosion emptiness


def inradius(P: MultiPolygon, tol: float = 1e-6) -> tuple[float, MultiPolygon]:
    """Radius of the largest inscribed disk, and a witness region.

    Bisection on lambda over the emptiness of the erosion of P by a lambda-disk:
    the erosion is non-empty exactly while lambda stays below the inradius.
    The disk's segment count is chosen so the polygonal-disk error stays under
    tol/2; the bisection contributes the other tol/2. The witness is the
    surviving erosion at (r - tol), which approximates the locus of centers of
    all largest inscribed disks.
    """
    from .minkowski import ApproxDisk, DiskMode, erode_disk

    if P.is_empty:
        raise EmptyInputError("inradius of empty region")
    if tol <= 0:
        raise ValueError("tol must be positive")

    _, hi = smallest_enclosing_circle(P)
    hi += tol
    lo = 0.0
    # Inscribed n-gon erosion empties at r_n with r <= r_n <= r*sec(pi/n);
    # pick n so hi*(sec(pi/n)-1) <= tol/2.
    half = 0.5 * tol
    x = math.sqrt(2.0 * half / max(hi, half))
    n = max(64, int(math.ceil(math.pi / x)))
    n += (-n) % 4  # vertices on both axes keep axis-aligned inputs exact

    def survives(lam: float) -> bool:
        if lam <= 0:
            return True
        disk = ApproxDisk(lam, n, DiskMode.INSCRIBED)
        return not erode_disk(P, disk).is_empty

    while hi - lo > half:
        mid = 0.5 * (lo + hi)
        if survives(mid):
            lo = mid
        else:
            hi = mid
    r = 0.5 * (lo + hi)
    witness_lam = max(r - tol, 0.0)
    disk = ApproxDisk(witness_lam, n, DiskMode.INSCRIBED) if witness_lam > 0 else None
    witness = erode_disk(P, disk) if disk else regularize(P)
    return r, witness


# ---------------------------------------------------------------------------
# Misc helpers used across modules


def box_polygon(bounds: tuple[float, float, float, float]) -> MultiPolygon:
    x0, y0, x1, y1 = bounds
    return MultiPolygon.box(x0, y0, x1, y1)


def inflate_bounds(
    bounds: tuple[float, float, float, float], margin: float
) -> tuple[float, float, float, float]:
    x0, y0, x1, y1 = bounds
    return (x0 - margin, y0 - margin, x1 + margin, y1 + margin)


def merge_bounds(
    a: tuple[float, float, float, float], b: tuple[float, float, float, float]
) -> tuple[float, float, float, float]:
    return (min(a[0], b[0]), min(a[1], b[1]), max(a[2], b[2]), max(a[3], b[3]))
