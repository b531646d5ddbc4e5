"""Minkowski sums, erosions, and disk offsets for planar regions.

The sum pipeline is: convex decomposition of each operand (the operand itself
when already convex, otherwise a constrained Delaunay triangulation), exact
edge-merge convolution of every convex pair, and a regularized union of the
pieces. Erosion goes through the complement duality inside a working box.

Pure functions over immutable values; the pairwise fan-out is deterministic.
"""

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
import shapely

from .errors import EmptyInputError
from .geom import (
    EPS,
    MultiPolygon,
    Point,
    _regularize,
    boolean_reg,
    BoolOp,
    inflate_bounds,
    is_convex,
    reflect,
)


class DiskMode(Enum):
    INSCRIBED = "INSCRIBED"
    CIRCUMSCRIBED = "CIRCUMSCRIBED"


@dataclass(frozen=True)
class ApproxDisk:
    """Regular n-gon standing in for the disk of radius `radius` centered at
    the origin. INSCRIBED puts vertices on the circle (polygon inside the
    disk); CIRCUMSCRIBED puts edge midpoints on it (polygon outside)."""

    radius: float
    segments: int = 64
    mode: DiskMode = DiskMode.INSCRIBED

    def __post_init__(self):
        if self.radius < 0:
            raise ValueError("disk radius must be >= 0")
        if self.segments < 8:
            raise ValueError("disk needs at least 8 segments")

    @property
    def chord_error(self) -> float:
        """Worst-case deviation of the polygon boundary from the true circle."""
        a = math.pi / self.segments
        if self.mode is DiskMode.INSCRIBED:
            return self.radius * (1.0 - math.cos(a))
        return self.radius * (1.0 / math.cos(a) - 1.0)

    def polygon(self) -> MultiPolygon:
        n = self.segments
        if self.mode is DiskMode.INSCRIBED:
            rad = self.radius
            phase = 0.0
        else:
            rad = self.radius / math.cos(math.pi / n)
            phase = math.pi / n  # edge midpoints land on the axes
        pts = [
            (rad * math.cos(2 * math.pi * k / n + phase), rad * math.sin(2 * math.pi * k / n + phase))
            for k in range(n)
        ]
        return MultiPolygon.from_coords(pts)


@dataclass(frozen=True)
class DegenerateFeature:
    """Lower-dimensional artifact (crack or pinch point) removed from the sum's
    interior during the regularized union."""

    kind: str  # "POLYLINE" | "POINT"
    points: tuple[tuple[float, float], ...]


@dataclass(frozen=True)
class MinkResult:
    region: MultiPolygon
    degenerate_features: tuple[DegenerateFeature, ...] = field(default_factory=tuple)


# ---------------------------------------------------------------------------
# Convex machinery


def _strict_hull(arr: np.ndarray) -> np.ndarray:
    from .geom import _hull_coords

    hull = _hull_coords([tuple(p) for p in arr])
    return np.array(hull, dtype=float)


def _convex_parts(mp: MultiPolygon) -> list[np.ndarray]:
    """CCW vertex arrays of a convex decomposition of mp."""
    if is_convex(mp):
        return [_strict_hull(mp.vertex_array())]
    parts = []
    for outer, holes in mp.polys:
        poly = shapely.Polygon(outer.coords(), [h.coords() for h in holes])
        tris = shapely.constrained_delaunay_triangles(poly)
        for tri in tris.geoms:
            if tri.is_empty or tri.area <= 0:
                continue
            coords = np.array(tri.exterior.coords[:-1], dtype=float)
            if _signed_area(coords) < 0:
                coords = coords[::-1]
            parts.append(coords)
    return parts


def _signed_area(arr: np.ndarray) -> float:
    x, y = arr[:, 0], arr[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))


def _lowest_index(arr: np.ndarray) -> int:
    i = int(np.lexsort((arr[:, 0], arr[:, 1]))[0])
    return i


def _unwrapped_angles(V: np.ndarray) -> np.ndarray:
    """Monotone edge-direction angles of a convex CCW polygon whose first
    vertex is the bottom-most (then left-most) one."""
    edges = np.roll(V, -1, axis=0) - V
    ang = np.arctan2(edges[:, 1], edges[:, 0])
    inc = np.mod(np.diff(ang), 2.0 * math.pi)
    return np.concatenate([[ang[0]], ang[0] + np.cumsum(inc)])


def _convolve_convex(P: np.ndarray, Q: np.ndarray) -> np.ndarray:
    """Minkowski sum of two convex CCW polygons by merging edges by angle.

    Every output vertex is an exact pairwise sum p_i + q_j, which keeps the
    box-algebra exact to the last ulp. The merge is a stable sort of the two
    monotone edge-angle sequences; equal angles just yield a collinear
    intermediate vertex that the cleanup pass removes.
    """
    P = np.roll(P, -_lowest_index(P), axis=0)
    Q = np.roll(Q, -_lowest_index(Q), axis=0)
    n, m = len(P), len(Q)
    order = np.argsort(np.concatenate([_unwrapped_angles(P), _unwrapped_angles(Q)]),
                       kind="stable")
    from_p = order < n
    consumed_p = np.concatenate([[0], np.cumsum(from_p)])[:-1]
    consumed_q = np.concatenate([[0], np.cumsum(~from_p)])[:-1]
    return P[consumed_p % n] + Q[consumed_q % m]


def _pieces_to_shapely(pieces: list[np.ndarray]):
    return [shapely.Polygon(p) for p in pieces if len(p) >= 3]


def _union_pieces(pieces: list[np.ndarray]) -> tuple[MultiPolygon, object]:
    polys = _pieces_to_shapely(pieces)
    if not polys:
        return MultiPolygon.empty(), None
    u = shapely.union_all(polys)
    return _regularize(u), u


# ---------------------------------------------------------------------------
# Degenerate feature detection (outer-envelope bookkeeping)


def _detect_degenerate(pieces: list[np.ndarray], union_geom, A: MultiPolygon,
                       B: MultiPolygon) -> tuple[DegenerateFeature, ...]:
    """Find seam segments of the union that witness tangential contact:
    positions p in the sum of A and B where the reflection of B translated by
    p touches A without interior overlap, yet p became interior to the
    regularized region.

    Seams from the convex decomposition itself also sit in the interior, so
    every candidate is verified with an actual touching test.
    """
    if union_geom is None or len(pieces) <= 1:
        return ()
    boundary_lines = shapely.union_all([shapely.LineString(np.vstack([p, p[:1]])) for p in pieces])
    interior_lines = boundary_lines.difference(union_geom.boundary.buffer(4 * EPS))
    candidates = []
    for part in _line_parts(interior_lines):
        mid = part.interpolate(0.5, normalized=True)
        candidates.append((part, (mid.x, mid.y)))
    feats = []
    # p is in A (+) B iff (reflect(B) + p) meets A.
    probe_geom = reflect(B).shapely
    a_geom = A.shapely
    for part, (mx, my) in candidates:
        if not union_geom.covers(shapely.Point(mx, my)):
            continue
        off = np.array([mx, my])
        moved = shapely.transform(probe_geom, lambda c: c + off)
        inter = moved.intersection(a_geom)
        if inter.is_empty:
            continue
        if inter.area <= (10 * EPS) ** 2:  # touch without interior overlap
            coords = tuple((float(x), float(y)) for x, y in part.coords)
            feats.append(DegenerateFeature("POLYLINE", coords))
    return tuple(feats)


def _line_parts(geom):
    if geom is None or geom.is_empty:
        return
    if geom.geom_type == "LineString":
        yield geom
    elif geom.geom_type in ("MultiLineString", "GeometryCollection"):
        for g in geom.geoms:
            yield from _line_parts(g)


# ---------------------------------------------------------------------------
# Public operations


def mink_sum(A: MultiPolygon, B: MultiPolygon, record_features: bool = True) -> MinkResult:
    """Minkowski sum of two regions (always an r-set).

    `degenerate_features` lists 1-dimensional contact loci that the
    regularized union closed over; they lie on or outside the region's
    boundary and matter only to touching semantics.
    """
    if A.is_empty or B.is_empty:
        raise EmptyInputError("mink_sum requires non-empty operands")
    parts_a = _convex_parts(A)
    parts_b = _convex_parts(B)
    pieces = [_convolve_convex(pa, pb) for pa in parts_a for pb in parts_b]
    region, raw_union = _union_pieces(pieces)
    feats = ()
    if record_features and len(pieces) > 1:
        feats = _detect_degenerate(pieces, raw_union, A, B)
    return MinkResult(region, feats)


def mink_region(A: MultiPolygon, B: MultiPolygon) -> MultiPolygon:
    """Minkowski sum without feature bookkeeping."""
    return mink_sum(A, B, record_features=False).region


def erosion(A: MultiPolygon, B: MultiPolygon) -> MultiPolygon:
    """Minkowski difference: the intersection of A translated over every point
    of B. Computed through the complement identity inside a working box large
    enough that clipping cannot touch the true result. Empty results are
    meaningful (containment fails everywhere)."""
    if B.is_empty:
        raise EmptyInputError("erosion needs a non-empty structuring region")
    if A.is_empty:
        return MultiPolygon.empty()

    bx0, by0, bx1, by1 = B.bounds
    center = Point((bx0 + bx1) / 2.0, (by0 + by1) / 2.0)
    B0 = B.translated(-center)
    # bbox diagonal bounds the diameter; inflating more than needed is safe
    margin = math.hypot(bx1 - bx0, by1 - by0) + 1.0

    V = MultiPolygon.box(*inflate_bounds(A.bounds, margin))
    U = MultiPolygon.box(*inflate_bounds(A.bounds, 2.0 * margin))
    comp = boolean_reg(U, A, BoolOp.DIFF)
    if comp.is_empty:
        grown = MultiPolygon.empty()
    else:
        grown = mink_region(comp, B0)
    eroded = boolean_reg(V, grown, BoolOp.DIFF) if not grown.is_empty else V
    if eroded.is_empty:
        return eroded
    return eroded.translated(center)


def dilate_disk(A: MultiPolygon, disk: ApproxDisk) -> MultiPolygon:
    """Offset A outward by the polygonal disk."""
    if A.is_empty:
        return A
    if disk.radius == 0:
        return A
    return mink_region(A, disk.polygon())


def erode_disk(A: MultiPolygon, disk: ApproxDisk) -> MultiPolygon:
    """Offset A inward by the polygonal disk."""
    if A.is_empty or disk.radius == 0:
        return A
    return erosion(A, disk.polygon())


def cspace_obstacle(A: MultiPolygon, B: MultiPolygon, record_features: bool = True) -> MinkResult:
    """Translations of B that make it meet A: the sum of A with the reflection
    of B. A translation p gives overlap iff p lies in the region (boundary
    contact corresponds to outer touching, up to the recorded features)."""
    if A.is_empty or B.is_empty:
        raise EmptyInputError("cspace_obstacle requires non-empty operands")
    return mink_sum(A, reflect(B), record_features=record_features)
