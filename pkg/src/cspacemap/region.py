"""Algebra of possibly non-regular planar regions.

A `RegionNR` is a closed 2D part (`area`) plus per-edge inclusion flags on its
boundary, plus isolated lower-dimensional pieces: `features` are included
curves/points lying outside the area's interior, `cracks` are excluded
curves/points lying inside it (they appear when complementing a region that
had features). This represents every set the constraint evaluator can
produce under the general-position assumption: open, closed, mixed, or
lower-dimensional solutions.

Membership of a point is decided in this order: within eps of a crack -> not
a member; within eps of the area boundary -> the local flag decides (mixed
flags report BOUNDARY_AMBIGUOUS rather than guessing); strictly inside ->
member; within eps of a feature -> member; otherwise not a member.

Complements are taken relative to a bounding window; synthetic window-frame
edges are marked so they never masquerade as real boundaries.
"""

import math
from dataclasses import dataclass, replace
from enum import Enum
from functools import cached_property

import numpy as np
import shapely
import shapely.ops

from .geom import (
    EPS,
    BoolOp,
    MultiPolygon,
    Point,
    boolean_reg,
    box_polygon,
    merge_bounds,
    regularize,
)

Bounds = tuple[float, float, float, float]


class Flag(Enum):
    INCLUDED = "INCLUDED"
    EXCLUDED = "EXCLUDED"
    AMBIGUOUS = "AMBIGUOUS"


class Membership(Enum):
    MEMBER = "MEMBER"
    NON_MEMBER = "NON_MEMBER"
    BOUNDARY_AMBIGUOUS = "BOUNDARY_AMBIGUOUS"


_MEMBER, _NON, _AMB = 1, 0, 2  # int codes used by the vectorized classifier


@dataclass(frozen=True)
class BoundaryPiece:
    a: tuple[float, float]
    b: tuple[float, float]
    flag: Flag
    synthetic: bool = False  # window-frame edge introduced by a complement

    def midpoint(self) -> tuple[float, float]:
        return ((self.a[0] + self.b[0]) / 2.0, (self.a[1] + self.b[1]) / 2.0)


@dataclass(frozen=True)
class FreeFeature:
    kind: str  # "POLYLINE" | "POINT"
    points: tuple[tuple[float, float], ...]

    def __post_init__(self):
        if self.kind == "POLYLINE" and len(self.points) < 2:
            raise ValueError("polyline feature needs at least 2 vertices")
        if self.kind == "POINT" and len(self.points) != 1:
            raise ValueError("point feature needs exactly 1 vertex")

    @cached_property
    def geometry(self):
        if self.kind == "POINT":
            return shapely.Point(self.points[0])
        return shapely.LineString(self.points)


@dataclass(frozen=True)
class RegionNR:
    area: MultiPolygon
    pieces: tuple[BoundaryPiece, ...] = ()
    features: tuple[FreeFeature, ...] = ()
    cracks: tuple[FreeFeature, ...] = ()
    window: Bounds | None = None
    diagnostics: tuple[str, ...] = ()

    @cached_property
    def _area_geom(self):
        return self.area.shapely

    @cached_property
    def _boundary_geom(self):
        return self.area.shapely.boundary

    @cached_property
    def _piece_tree(self):
        if not self.pieces:
            return None
        return shapely.STRtree([shapely.LineString([p.a, p.b]) for p in self.pieces])

    @cached_property
    def _feature_geom(self):
        if not self.features:
            return None
        return shapely.union_all([f.geometry for f in self.features])

    @cached_property
    def _crack_geom(self):
        if not self.cracks:
            return None
        return shapely.union_all([c.geometry for c in self.cracks])

    def is_void(self) -> bool:
        return self.area.is_empty and not self.features


# ---------------------------------------------------------------------------
# Constructors


def _pieces_from_area(area: MultiPolygon, flag: Flag, synthetic: bool = False
                      ) -> tuple[BoundaryPiece, ...]:
    pieces = []
    for ring in area.rings():
        coords = ring.coords()
        n = len(coords)
        for i in range(n):
            pieces.append(BoundaryPiece(coords[i], coords[(i + 1) % n], flag, synthetic))
    return tuple(pieces)


def region_from_polygon(area: MultiPolygon, flag: Flag = Flag.INCLUDED,
                        window: Bounds | None = None,
                        diagnostics: tuple[str, ...] = ()) -> RegionNR:
    return RegionNR(area, _pieces_from_area(area, flag), window=window,
                    diagnostics=diagnostics)


def region_from_features(features: tuple[FreeFeature, ...],
                         window: Bounds | None = None,
                         diagnostics: tuple[str, ...] = ()) -> RegionNR:
    return RegionNR(MultiPolygon.empty(), (), tuple(features), window=window,
                    diagnostics=diagnostics)


def empty_region(window: Bounds | None = None,
                 diagnostics: tuple[str, ...] = ()) -> RegionNR:
    return RegionNR(MultiPolygon.empty(), window=window, diagnostics=diagnostics)


def full_region(window: Bounds) -> RegionNR:
    area = box_polygon(window)
    return RegionNR(area, _pieces_from_area(area, Flag.INCLUDED, synthetic=True),
                    window=window)


# ---------------------------------------------------------------------------
# Classification


def nr_classify_batch(R: RegionNR, pts: np.ndarray, eps: float = EPS) -> np.ndarray:
    """Vectorized membership. Returns int8 codes: 1 member, 0 non-member,
    2 boundary-ambiguous."""
    n = len(pts)
    out = np.zeros(n, dtype=np.int8)
    if n == 0:
        return out
    geoms = shapely.points(pts)

    crack_near = np.zeros(n, dtype=bool)
    if R._crack_geom is not None:
        crack_near = shapely.dwithin(R._crack_geom, geoms, eps)

    if not R.area.is_empty:
        d = shapely.distance(R._boundary_geom, geoms)
        inside = shapely.contains(R._area_geom, geoms)
        on_boundary = d <= eps
        out[inside & ~on_boundary] = _MEMBER
        idx = np.nonzero(on_boundary)[0]
        if len(idx) and R._piece_tree is not None:
            for i in idx:
                out[i] = _resolve_flags(R, pts[i], eps)
    if R._feature_geom is not None:
        feat_near = shapely.dwithin(R._feature_geom, geoms, eps)
        out[feat_near & (out == _NON)] = _MEMBER
    out[crack_near] = _NON
    return out


def _resolve_flags(R: RegionNR, pt: np.ndarray, eps: float) -> int:
    p = shapely.Point(pt)
    hits = R._piece_tree.query(p, predicate="dwithin", distance=eps * 1.0000001)
    flags = {R.pieces[int(h)].flag for h in hits}
    if not flags:
        # numerically on the boundary but no piece within eps: fall back to
        # containment of the closed area
        return _MEMBER if R._area_geom.covers(p) else _NON
    if Flag.AMBIGUOUS in flags or len(flags) > 1:
        return _AMB
    return _MEMBER if flags == {Flag.INCLUDED} else _NON


def nr_classify(R: RegionNR, p: Point, eps: float = EPS) -> Membership:
    code = int(nr_classify_batch(R, np.array([[p.x, p.y]]), eps)[0])
    return {_MEMBER: Membership.MEMBER, _NON: Membership.NON_MEMBER,
            _AMB: Membership.BOUNDARY_AMBIGUOUS}[code]


def _membership_code(R: RegionNR, xy: tuple[float, float], eps: float) -> int:
    return int(nr_classify_batch(R, np.array([xy]), eps)[0])


# ---------------------------------------------------------------------------
# Feature plumbing


def _feature_parts(geom) -> list[FreeFeature]:
    """Split a shapely geometry into FreeFeatures (lines and points)."""
    feats = []
    if geom is None or geom.is_empty:
        return feats
    gt = geom.geom_type
    if gt == "Point":
        feats.append(FreeFeature("POINT", ((geom.x, geom.y),)))
    elif gt == "LineString":
        coords = tuple((float(x), float(y)) for x, y in geom.coords)
        if len(coords) >= 2:
            feats.append(FreeFeature("POLYLINE", coords))
    elif gt in ("MultiPoint", "MultiLineString", "GeometryCollection"):
        for g in geom.geoms:
            feats.extend(_feature_parts(g))
    return feats


def _feature_rep_point(f: FreeFeature) -> tuple[float, float]:
    if f.kind == "POINT" or len(f.points) == 0:
        return f.points[0]
    mid = f.geometry.interpolate(0.5, normalized=True)
    return (mid.x, mid.y)


def _merge_lines(feats: list[FreeFeature]) -> tuple[FreeFeature, ...]:
    """Fuse contiguous polyline fragments; keep points as-is."""
    lines = [f.geometry for f in feats if f.kind == "POLYLINE"]
    points = [f for f in feats if f.kind == "POINT"]
    out: list[FreeFeature] = []
    if lines:
        merged = shapely.ops.linemerge(shapely.MultiLineString(
            [list(l.coords) for l in lines]))
        out.extend(_feature_parts(merged))
    seen = set()
    for p in points:
        key = (round(p.points[0][0], 12), round(p.points[0][1], 12))
        if key not in seen:
            seen.add(key)
            out.append(p)
    return tuple(out)


def _clip_features(feats: tuple[FreeFeature, ...], S: RegionNR, eps: float
                   ) -> list[FreeFeature]:
    """Parts of the given features that are members of S."""
    kept: list[FreeFeature] = []
    for f in feats:
        g = f.geometry
        pieces = []
        if not S.area.is_empty:
            pieces.extend(_feature_parts(g.intersection(S._area_geom)))
        if S._feature_geom is not None:
            pieces.extend(_feature_parts(g.intersection(S._feature_geom)))
        for part in pieces:
            if _membership_code(S, _feature_rep_point(part), eps) == _MEMBER:
                kept.append(part)
    return kept


def _prune_redundant(feats: list[FreeFeature], area: MultiPolygon, eps: float
                     ) -> list[FreeFeature]:
    """Drop feature parts that the 2D area already accounts for."""
    if area.is_empty:
        return feats
    out = []
    geom = area.shapely
    boundary = geom.boundary
    for f in feats:
        g = f.geometry
        leftover = g.difference(geom)  # parts outside the closed area
        near_parts = []
        for part in _feature_parts(g.intersection(geom)):
            # keep only fragments hugging the boundary; interior ones are
            # redundant (already members through the area)
            if boundary.distance(part.geometry) > eps:
                continue
            near_parts.append(part)
        out.extend(_feature_parts(leftover))
        # boundary-hugging parts stay: the recomputed edge flags may or may
        # not include them, and classification checks flags first anyway
        out.extend(near_parts)
    return out


def _clip_cracks(cracks: tuple[FreeFeature, ...], other: RegionNR | None,
                 result_area: MultiPolygon, eps: float, mode: str) -> list[FreeFeature]:
    """Cracks that survive a Boolean op: for unions the other operand can heal
    a crack by covering it; for intersections cracks persist inside the result."""
    out: list[FreeFeature] = []
    for c in cracks:
        parts = [c]
        if mode == "union" and other is not None:
            parts = []
            for piece in _feature_parts(c.geometry):
                code = _membership_code(other, _feature_rep_point(piece), eps)
                if code != _MEMBER:
                    parts.append(piece)
        for piece in parts:
            if result_area.is_empty:
                continue
            if result_area.shapely.covers(piece.geometry):
                out.append(piece)
    return out


# ---------------------------------------------------------------------------
# Boolean operations


def _combine_union(a: int, b: int) -> int:
    if a == _MEMBER or b == _MEMBER:
        return _MEMBER
    if a == _AMB or b == _AMB:
        return _AMB
    return _NON


def _combine_intersect(a: int, b: int) -> int:
    if a == _NON or b == _NON:
        return _NON
    if a == _AMB or b == _AMB:
        return _AMB
    return _MEMBER


_CODE_TO_FLAG = {_MEMBER: Flag.INCLUDED, _NON: Flag.EXCLUDED, _AMB: Flag.AMBIGUOUS}


def _recompute_pieces(area: MultiPolygon, R: RegionNR, S: RegionNR, combine,
                      eps: float) -> tuple[BoundaryPiece, ...]:
    pieces = []
    for piece in _pieces_from_area(area, Flag.INCLUDED):
        m = piece.midpoint()
        code = combine(_membership_code(R, m, eps), _membership_code(S, m, eps))
        pieces.append(replace(piece, flag=_CODE_TO_FLAG[code]))
    return tuple(pieces)


def _merged_window(R: RegionNR, S: RegionNR) -> Bounds | None:
    if R.window and S.window:
        return merge_bounds(R.window, S.window)
    return R.window or S.window


def nr_union(R: RegionNR, S: RegionNR, eps: float = EPS) -> RegionNR:
    area = boolean_reg(R.area, S.area, BoolOp.UNION)
    pieces = _recompute_pieces(area, R, S, _combine_union, eps)
    feats = _prune_redundant(list(R.features), area, eps) \
        + _prune_redundant(list(S.features), area, eps)
    cracks = _clip_cracks(R.cracks, S, area, eps, "union") \
        + _clip_cracks(S.cracks, R, area, eps, "union")
    return RegionNR(area, pieces, _merge_lines(feats), tuple(cracks),
                    _merged_window(R, S), R.diagnostics + S.diagnostics)


def nr_intersect(R: RegionNR, S: RegionNR, eps: float = EPS) -> RegionNR:
    area = boolean_reg(R.area, S.area, BoolOp.INTERSECT)
    pieces = _recompute_pieces(area, R, S, _combine_intersect, eps)
    feats = _clip_features(R.features, S, eps) + _clip_features(S.features, R, eps)
    feats = _prune_redundant(feats, area, eps)
    cracks = _clip_cracks(R.cracks, None, area, eps, "intersect") \
        + _clip_cracks(S.cracks, None, area, eps, "intersect")
    return RegionNR(area, pieces, _merge_lines(feats), tuple(cracks),
                    _merged_window(R, S), R.diagnostics + S.diagnostics)


def _flip(flag: Flag) -> Flag:
    if flag is Flag.INCLUDED:
        return Flag.EXCLUDED
    if flag is Flag.EXCLUDED:
        return Flag.INCLUDED
    return Flag.AMBIGUOUS


def nr_complement(R: RegionNR, window: Bounds | None = None, eps: float = EPS) -> RegionNR:
    """Complement relative to the window. Real boundary flags flip; the
    window frame enters as synthetic included edges; features become cracks
    of the complement and cracks resurface as features."""
    w = window or R.window
    if w is None:
        raise ValueError("complement needs a window (none stored on the region)")
    if not R.area.is_empty:
        w = merge_bounds(w, R.area.bounds)
    frame = box_polygon(w)
    area_c = boolean_reg(frame, R.area, BoolOp.DIFF)

    frame_boundary = frame.shapely.boundary
    pieces = []
    for piece in _pieces_from_area(area_c, Flag.INCLUDED):
        m = shapely.Point(piece.midpoint())
        near_r = None
        if R._piece_tree is not None:
            hits = R._piece_tree.query(m, predicate="dwithin", distance=eps * 1.0000001)
            if len(hits):
                flags = {R.pieces[int(h)].flag for h in hits}
                near_r = flags
        if near_r is not None:
            if len(near_r) > 1 or Flag.AMBIGUOUS in near_r:
                pieces.append(replace(piece, flag=Flag.AMBIGUOUS))
            else:
                pieces.append(replace(piece, flag=_flip(next(iter(near_r)))))
        elif frame_boundary.distance(m) <= eps:
            pieces.append(replace(piece, flag=Flag.INCLUDED, synthetic=True))
        else:
            pieces.append(replace(piece, flag=Flag.INCLUDED))

    # Included isolated pieces of R are excluded slits of the complement and
    # vice versa; both only matter where they fall inside / outside area_c.
    new_cracks = []
    for f in R.features:
        if not area_c.is_empty and area_c.shapely.covers(f.geometry) \
                and area_c.shapely.boundary.distance(f.geometry) > eps:
            new_cracks.append(f)
    new_features = list(R.cracks)
    return RegionNR(area_c, tuple(pieces), _merge_lines(new_features),
                    tuple(new_cracks), w, R.diagnostics)


# ---------------------------------------------------------------------------
# Topological operations


def nr_interior(R: RegionNR) -> RegionNR:
    """Open version: boundary excluded, isolated included pieces dropped.
    Synthetic frame edges stay included (they are not real boundary)."""
    pieces = tuple(
        p if p.synthetic else replace(p, flag=Flag.EXCLUDED) for p in R.pieces
    )
    return RegionNR(R.area, pieces, (), R.cracks, R.window, R.diagnostics)


def nr_closure(R: RegionNR) -> RegionNR:
    pieces = tuple(replace(p, flag=Flag.INCLUDED) for p in R.pieces)
    return RegionNR(R.area, pieces, R.features, (), R.window, R.diagnostics)


def nr_boundary(R: RegionNR) -> RegionNR:
    """The topological boundary as a pure feature region: every non-synthetic
    area edge plus all isolated pieces (features and cracks both lie in the
    closure but not the interior)."""
    feats: list[FreeFeature] = []
    for p in R.pieces:
        if not p.synthetic:
            feats.append(FreeFeature("POLYLINE", (p.a, p.b)))
    feats.extend(R.features)
    feats.extend(R.cracks)
    return RegionNR(MultiPolygon.empty(), (), _merge_lines(feats), (),
                    R.window, R.diagnostics)


def nr_regularize(R: RegionNR) -> MultiPolygon:
    """Closure of the interior: the 2D area with all isolated pieces dropped."""
    return regularize(R.area)


# ---------------------------------------------------------------------------
# Difference with boundary residue (used for equality constraints)


def nr_difference(R: RegionNR, S: RegionNR, window: Bounds | None = None,
                  eps: float = EPS) -> RegionNR:
    """R minus S, keeping the lower-dimensional residue: included boundary
    pieces of R that are not members of S survive as features even when the
    2D part vanishes (a closed slice minus its own interior leaves exactly
    its boundary curve)."""
    w = window or _merged_window(R, S)
    comp = nr_complement(S, w, eps) if not S.is_void() else full_region(w)
    result = nr_intersect(R, comp, eps)
    residue: list[FreeFeature] = []
    res_boundary = result.area.shapely.boundary if not result.area.is_empty else None
    for piece in R.pieces:
        if piece.flag is not Flag.INCLUDED or piece.synthetic:
            continue
        m = piece.midpoint()
        if _membership_code(S, m, eps) == _MEMBER:
            continue
        seg = shapely.LineString([piece.a, piece.b])
        if res_boundary is not None and res_boundary.distance(seg) <= eps:
            continue  # already represented by a flagged edge
        residue.append(FreeFeature("POLYLINE", (piece.a, piece.b)))
    if not residue:
        return result
    feats = _merge_lines(list(result.features) + residue)
    return replace(result, features=feats)


# ---------------------------------------------------------------------------
# Curve intersection


@dataclass(frozen=True)
class CurveIntersection:
    points: tuple[Point, ...]
    diagnostics: tuple[str, ...] = ()


def nr_curve_intersect(R: RegionNR, S: RegionNR, eps: float = EPS) -> CurveIntersection:
    """Transversal intersection points of two feature regions (curves).

    Overlapping stretches are degenerate: their endpoints are returned and a
    DEGENERATE_OVERLAP diagnostic is attached.
    """
    ga = R._feature_geom
    gb = S._feature_geom
    if ga is None or gb is None:
        return CurveIntersection(())
    inter = ga.intersection(gb)
    pts: list[tuple[float, float]] = []
    diags: list[str] = []
    for part in _feature_parts(inter):
        if part.kind == "POINT":
            pts.append(part.points[0])
        else:
            diags.append("DEGENERATE_OVERLAP: curves share a 1-dimensional stretch")
            pts.append(part.points[0])
            pts.append(part.points[-1])
    unique: list[tuple[float, float]] = []
    for p in pts:
        if all(math.hypot(p[0] - q[0], p[1] - q[1]) > eps for q in unique):
            unique.append(p)
    return CurveIntersection(tuple(Point(x, y) for x, y in unique), tuple(diags))
