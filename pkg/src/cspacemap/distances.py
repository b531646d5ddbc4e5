"""Scalar distances between planar regions.

Sign conventions, throughout with B the movable object and A the fixed one:

* ``gamma1`` (minimum translational distance): positive separation when the
  objects are disjoint, zero at outer touching, minus the penetration depth
  when interiors overlap. Equals the signed distance from the origin to the
  boundary of the C-space obstacle of the pair.
* ``gamma2`` (maximum translational distance): how far B must translate, at
  most, to still touch A; equals the largest vertex-pair distance.
* ``eta1``/``eta2``: minimal/maximal translations reaching inner touching of B
  inside A; defined only when B fits in A somewhere (non-empty erosion base).
  ``eta1 < 0`` iff B sits strictly inside A.
* ``delta1``/``delta2``: the covering analogs (A inside B).
* ``mu``: signed directed Hausdorff distance, the supremum over points of B of
  their signed point distance to A; falls back to ``eta1`` under containment.
* ``hausdorff``: max of the two directed values; zero iff the regions match.

All functions are pure and thread-safe.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
import shapely
import shapely.ops

from .errors import EmptyInputError, OracleMismatchError, UndefinedDistanceError
from .geom import (
    EPS,
    MultiPolygon,
    Point,
    ORIGIN,
    extreme_points,
    reflect,
    smallest_enclosing_circle,
)
from .minkowski import (
    ApproxDisk,
    DiskMode,
    MinkResult,
    cspace_obstacle,
    dilate_disk,
    erode_disk,
    erosion,
)


class DistanceKind(Enum):
    D1 = "d1"
    D2 = "d2"
    DSTAR = "dstar"
    GAMMA1 = "gamma1"
    GAMMA2 = "gamma2"
    ETA1 = "eta1"
    ETA2 = "eta2"
    DELTA1 = "delta1"
    DELTA2 = "delta2"
    MU_BA = "mu"      # directed, subject relative to reference
    MU_AB = "hdir"    # directed, reference relative to subject
    HAUS = "haus"


@dataclass(frozen=True)
class SignedDistance:
    value: float
    witness: tuple[Point, Point] | None = None
    note: str | None = None


# ---------------------------------------------------------------------------
# Point-to-region primitives


def signed_point_distance(region: MultiPolygon, p: Point) -> SignedDistance:
    """Distance from p to the nearest boundary point of the region, negative
    when p lies inside. This is the primitive every signed distance reduces to."""
    if region.is_empty:
        raise EmptyInputError("signed distance against an empty region")
    pt = shapely.Point(p.x, p.y)
    boundary = region.shapely.boundary
    d = boundary.distance(pt)
    near = shapely.ops.nearest_points(boundary, pt)[0]
    witness = (p, Point(near.x, near.y))
    if region.shapely.contains(pt):
        return SignedDistance(-d, witness)
    return SignedDistance(d, witness)


def signed_distance_batch(region: MultiPolygon, pts: np.ndarray) -> np.ndarray:
    """Vectorized signed point distance for an (N, 2) array of query points."""
    geoms = shapely.points(pts)
    d = shapely.distance(region.shapely.boundary, geoms)
    inside = shapely.contains(region.shapely, geoms)
    return np.where(inside, -d, d)


def farthest_vertex_distance(verts: np.ndarray, p: Point) -> tuple[float, int]:
    d = np.hypot(verts[:, 0] - p.x, verts[:, 1] - p.y)
    i = int(np.argmax(d))
    return float(d[i]), i


def farthest_vertex_batch(verts: np.ndarray, pts: np.ndarray) -> np.ndarray:
    dx = pts[:, None, 0] - verts[None, :, 0]
    dy = pts[:, None, 1] - verts[None, :, 1]
    return np.max(np.hypot(dx, dy), axis=1)


def region_samples(B: MultiPolygon, boundary_step: float, interior_pitch: float) -> np.ndarray:
    """Sample points of B: boundary chains at the given step plus an interior
    grid. Used by the sampled route of `mu`."""
    pts: list[tuple[float, float]] = []
    for ring in B.rings():
        coords = ring.coords()
        n = len(coords)
        for i in range(n):
            x0, y0 = coords[i]
            x1, y1 = coords[(i + 1) % n]
            seg = math.hypot(x1 - x0, y1 - y0)
            k = max(1, int(math.ceil(seg / boundary_step)))
            for t in range(k):
                f = t / k
                pts.append((x0 + f * (x1 - x0), y0 + f * (y1 - y0)))
    x0, y0, x1, y1 = B.bounds
    if interior_pitch > 0:
        xs = np.arange(x0 + interior_pitch / 2, x1, interior_pitch)
        ys = np.arange(y0 + interior_pitch / 2, y1, interior_pitch)
        if len(xs) and len(ys):
            gx, gy = np.meshgrid(xs, ys)
            grid = np.column_stack([gx.ravel(), gy.ravel()])
            keep = shapely.covers(B.shapely, shapely.points(grid))
            pts.extend(map(tuple, grid[keep]))
    return np.array(pts, dtype=float)


# ---------------------------------------------------------------------------
# Standard distances


def d1(A: MultiPolygon, B: MultiPolygon) -> float:
    """Smallest distance between any two points of A and B; 0 when they meet."""
    if A.is_empty or B.is_empty:
        raise EmptyInputError("d1 of empty region")
    return float(A.shapely.distance(B.shapely))


def d2(A: MultiPolygon, B: MultiPolygon) -> float:
    """Largest distance between any two points: the exact vertex-pair maximum."""
    if A.is_empty or B.is_empty:
        raise EmptyInputError("d2 of empty region")
    va = np.array([p.as_tuple() for p in extreme_points(A)])
    vb = np.array([p.as_tuple() for p in extreme_points(B)])
    dx = va[:, None, 0] - vb[None, :, 0]
    dy = va[:, None, 1] - vb[None, :, 1]
    return float(np.max(np.hypot(dx, dy)))


# ---------------------------------------------------------------------------
# Translational distances (outer position)


def gamma1(B: MultiPolygon, A: MultiPolygon, co: MinkResult | None = None) -> SignedDistance:
    """Signed minimum translational distance of B relative to A.

    Reduces to the signed distance from the origin to the boundary of the
    C-space obstacle. When a recorded degenerate feature (a crack regularized
    out of the obstacle) lies closer than the regular boundary, the magnitude
    uses the feature and the result carries a note, since touching semantics
    at such loci are ambiguous in the boundary representation.
    """
    if co is None:
        co = cspace_obstacle(A, B)
    sd = signed_point_distance(co.region, ORIGIN)
    value, witness, note = sd.value, sd.witness, None
    for feat in co.degenerate_features:
        arr = np.array(feat.points)
        if len(arr) == 1:
            fd = math.hypot(arr[0][0], arr[0][1])
        else:
            fd = shapely.LineString(arr).distance(shapely.Point(0, 0))
        if fd + EPS < abs(value):
            value = math.copysign(fd, value) if fd > EPS else 0.0
            note = "nearest obstacle locus is a degenerate contact feature"
    return SignedDistance(value, witness, note)


def gamma2(B: MultiPolygon, A: MultiPolygon, co: MinkResult | None = None) -> float:
    """Maximum translational distance: the farthest boundary point of the
    C-space obstacle from the origin. Coincides with d2(B, A)."""
    if co is None:
        co = cspace_obstacle(A, B)
    verts = co.region.vertex_array()
    return float(np.max(np.hypot(verts[:, 0], verts[:, 1])))


# ---------------------------------------------------------------------------
# Containment and covering distances


def _inner_pair(base: MultiPolygon) -> tuple[SignedDistance, float]:
    first = signed_point_distance(base, ORIGIN)
    verts = base.vertex_array()
    second = float(np.max(np.hypot(verts[:, 0], verts[:, 1])))
    return first, second


def containment_base(B: MultiPolygon, A: MultiPolygon) -> MultiPolygon:
    """Translations placing B inside A (erosion of A by the reflection of B)."""
    return erosion(A, reflect(B))


def covering_base(B: MultiPolygon, A: MultiPolygon) -> MultiPolygon:
    """Translations of B that cover A (erosion of the reflection of B by A)."""
    return erosion(reflect(B), A)


def eta(B: MultiPolygon, A: MultiPolygon, base: MultiPolygon | None = None) -> tuple[SignedDistance, float]:
    """Containment distances of B in A: (eta1, eta2).

    eta1 is the signed distance from the origin to the boundary of the
    containment base, negative exactly when B sits strictly inside A. eta2 is
    the farthest such boundary point. Undefined when B fits nowhere in A.
    """
    if A.is_empty or B.is_empty:
        raise EmptyInputError("eta of empty region")
    if base is None:
        base = containment_base(B, A)
    if base.is_empty:
        raise UndefinedDistanceError("B cannot be contained in A: erosion base is empty")
    return _inner_pair(base)


def delta(B: MultiPolygon, A: MultiPolygon, base: MultiPolygon | None = None) -> tuple[SignedDistance, float]:
    """Covering distances of A by B: (delta1, delta2). Mirror image of eta."""
    if A.is_empty or B.is_empty:
        raise EmptyInputError("delta of empty region")
    if base is None:
        base = covering_base(B, A)
    if base.is_empty:
        raise UndefinedDistanceError("B cannot cover A: erosion base is empty")
    return _inner_pair(base)


def dstar(A: MultiPolygon, B: MultiPolygon) -> float:
    """Containment margin: distance from B to the complement of A when B sits
    inside A, else 0. Positive exactly for strict containment."""
    e1, _ = eta(B, A)
    return max(0.0, -e1.value)


def penetration_depth(A: MultiPolygon, B: MultiPolygon) -> float:
    """How deep the interiors interpenetrate; 0 when disjoint or touching."""
    return max(0.0, -gamma1(B, A).value)


# ---------------------------------------------------------------------------
# Signed directed Hausdorff distance


def _offset_region(A: MultiPolygon, lam: float, segments: int) -> MultiPolygon:
    if lam >= 0:
        if lam == 0:
            return A
        return dilate_disk(A, ApproxDisk(lam, segments, DiskMode.INSCRIBED))
    return erode_disk(A, ApproxDisk(-lam, segments, DiskMode.CIRCUMSCRIBED))


def _mu_bisect(B: MultiPolygon, A: MultiPolygon, segments: int, tol: float) -> float:
    """Smallest lambda with B inside the lambda-offset of A, by bisection on
    the offset-membership predicate."""
    _, R_A = smallest_enclosing_circle(A)
    lo = -R_A - 1.0
    hi = d2(A, B) + 1.0
    b_geom = B.shapely

    def inside(lam: float) -> bool:
        off = _offset_region(A, lam, segments)
        if off.is_empty:
            return False
        return off.shapely.covers(b_geom)

    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if inside(mid):
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def _mu_sampled(
    B: MultiPolygon, A: MultiPolygon, density: float, interior_divisions: int
) -> tuple[float, Point, float]:
    x0, y0, x1, y1 = B.bounds
    diam = math.hypot(x1 - x0, y1 - y0)
    pitch = max(diam / interior_divisions, 1.0 / density)
    samples = region_samples(B, 1.0 / density, pitch)
    vals = signed_distance_batch(A, samples)
    i = int(np.argmax(vals))
    return float(vals[i]), Point(*samples[i]), pitch


def _canonical_pose(B: MultiPolygon, A: MultiPolygon) -> tuple[MultiPolygon, MultiPolygon, float, Point]:
    """Rigid motion bringing the pair into a frame derived from A itself
    (vertex centroid at the origin, first vertex direction on +x).

    The polygonal offset disks are axis-aligned, so computing in this frame
    makes the bisection route exactly equivariant under common rigid motions
    of the pair instead of equivariant only up to the chord error.
    """
    verts = A.vertex_array()
    cx, cy = float(np.mean(verts[:, 0])), float(np.mean(verts[:, 1]))
    first = A.polys[0][0].points[0]
    theta = math.atan2(first.y - cy, first.x - cx)
    shift = Point(-cx, -cy)
    B2 = B.translated(shift).rotated(-theta)
    A2 = A.translated(shift).rotated(-theta)
    return B2, A2, theta, shift


def mu(
    B: MultiPolygon,
    A: MultiPolygon,
    disk_segments: int = 64,
    sample_density: float = 512.0,
    interior_divisions: int = 40,
) -> SignedDistance:
    """Signed directed Hausdorff distance from B to A.

    Computed twice: by bisection on membership of B in the offset family of A,
    and by the supremum of signed point distances over a dense sampling of B
    (boundary plus interior grid; interior points matter when A has holes).
    The two routes must agree within the disk chord error plus the sampling
    covering radius; a larger discrepancy raises instead of guessing. Both
    routes run in a canonical pose of the pair so the value depends only on
    the relative configuration.
    """
    if A.is_empty or B.is_empty:
        raise EmptyInputError("mu of empty region")
    B2, A2, theta, shift = _canonical_pose(B, A)
    sampled, witness_pt, pitch = _mu_sampled(B2, A2, sample_density, interior_divisions)
    chord = abs(sampled) * (1.0 / math.cos(math.pi / disk_segments) - 1.0) + 1e-9
    bis = _mu_bisect(B2, A2, disk_segments, tol=max(1e-6, chord / 4))
    budget = max(2 * chord, 1e-4) + 0.5 / sample_density + 0.75 * pitch
    if abs(bis - sampled) > budget:
        raise OracleMismatchError(
            f"mu routes disagree: bisection {bis:.6g} vs sampled {sampled:.6g} "
            f"(budget {budget:.3g})"
        )
    c, s = math.cos(theta), math.sin(theta)

    def back(p: Point) -> Point:
        return Point(c * p.x - s * p.y - shift.x, s * p.x + c * p.y - shift.y)

    near = signed_point_distance(A2, witness_pt)
    target = near.witness[1] if near.witness else witness_pt
    return SignedDistance(bis, (back(witness_pt), back(target)))


def hausdorff(A: MultiPolygon, B: MultiPolygon, **kw) -> float:
    """Symmetric Hausdorff distance: the larger of the two directed values."""
    return max(mu(A, B, **kw).value, mu(B, A, **kw).value)
