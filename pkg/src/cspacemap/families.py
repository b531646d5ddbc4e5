"""Parametric families of translation regions: the sublevel sets of every
translational distance, built from three cached Minkowski bases per object
pair.

For a pair (B movable, A fixed) the bases are the C-space obstacle (sum of A
with reflected B), the containment base (erosion of A by reflected B) and the
covering base (erosion of reflected B by A). Sublevel regions come from disk
dilation/erosion of a base, or, for the max-type distances, from intersecting
disks placed at the base's extreme points (equivalent by convexity of the
disk, and much cheaper than eroding a huge disk).

Slices are monotone in lambda and carry the polygonal-disk error bound
``error_bound = |lambda| * (sec(pi/n) - 1)`` so correspondence checks can
exclude a band of that width around slice boundaries.
"""

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
import shapely

from .errors import EmptyInputError, UndefinedDistanceError
from .geom import (
    EPS,
    MultiPolygon,
    Point,
    _regularize,
    extreme_points,
    inradius,
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


class FamilyKind(Enum):
    GAMMA1_F = "gamma1"
    GAMMA2_F = "gamma2"
    H1_F = "eta1"
    H2_F = "eta2"
    DELTA1_F = "delta1"
    DELTA2_F = "delta2"
    M1_F = "mu"
    M2_F = "hdir"
    M3_F = "haus"


# Offset-type sublevel sets (dilate/erode the base) vs disk-intersection type.
_OFFSET_KINDS = {FamilyKind.GAMMA1_F, FamilyKind.H1_F, FamilyKind.DELTA1_F}
_INTERSECT_KINDS = {FamilyKind.GAMMA2_F, FamilyKind.H2_F, FamilyKind.DELTA2_F}
_MU_KINDS = {FamilyKind.M1_F, FamilyKind.M2_F, FamilyKind.M3_F}


@dataclass(frozen=True)
class DiskConfig:
    """Disk approximation used by all family constructions.

    Default modes keep polygonal results conservative (inside the true
    offset region): inscribed polygons for dilation, circumscribed for
    erosion. `flip_modes` inverts both. Disk intersections always use
    circumscribed polygons so the slice at the minimal lambda survives as a
    tiny lens around the enclosing-circle center instead of vanishing.
    """

    segments: int = 64
    flip_modes: bool = False

    @property
    def dilate_mode(self) -> DiskMode:
        return DiskMode.CIRCUMSCRIBED if self.flip_modes else DiskMode.INSCRIBED

    @property
    def erode_mode(self) -> DiskMode:
        return DiskMode.INSCRIBED if self.flip_modes else DiskMode.CIRCUMSCRIBED

    def error_at(self, lam: float) -> float:
        return abs(lam) * (1.0 / math.cos(math.pi / self.segments) - 1.0)


class BaseMeta:
    """Extreme parameters of one family base, computed lazily."""

    def __init__(self, region: MultiPolygon, inradius_tol: float = 1e-6):
        self.region = region
        self._tol = inradius_tol
        self._r: float | None = None
        self._witness: MultiPolygon | None = None
        self._sec: tuple[Point, float] | None = None

    def _ensure_sec(self):
        if self._sec is None:
            self._sec = smallest_enclosing_circle(self.region)

    @property
    def R_base(self) -> float:
        self._ensure_sec()
        return self._sec[1]

    @property
    def center(self) -> Point:
        self._ensure_sec()
        return self._sec[0]

    @property
    def r_base(self) -> float:
        if self._r is None:
            self._r, self._witness = inradius(self.region, self._tol)
        return self._r

    @property
    def inradius_witness(self) -> MultiPolygon:
        self.r_base
        return self._witness


@dataclass(frozen=True)
class FamilySlice:
    kind: FamilyKind
    lam: float
    region: MultiPolygon
    base_region: MultiPolygon
    meta: BaseMeta = field(repr=False)
    error_bound: float = 0.0


class PairCache:
    """Shared Minkowski bases for one (movable, fixed) object pair.

    Construction is lazy; recomputation is pure, so concurrent first use is
    benign. Slices are memoized per (kind, lambda).
    """

    def __init__(self, B: MultiPolygon, A: MultiPolygon, disk: DiskConfig = DiskConfig(),
                 inradius_tol: float = 1e-6):
        if A.is_empty or B.is_empty:
            raise EmptyInputError("family cache needs non-empty objects")
        self.B = B
        self.A = A
        self.disk = disk
        self._inradius_tol = inradius_tol
        self._co: MinkResult | None = None
        self._ero: MultiPolygon | None = None
        self._cov: MultiPolygon | None = None
        self._meta: dict[str, BaseMeta] = {}
        self._slices: dict[tuple[FamilyKind, float], FamilySlice] = {}

    # -- bases -------------------------------------------------------------

    @property
    def co(self) -> MinkResult:
        if self._co is None:
            self._co = cspace_obstacle(self.A, self.B)
        return self._co

    @property
    def containment(self) -> MultiPolygon:
        if self._ero is None:
            self._ero = erosion(self.A, reflect(self.B))
        return self._ero

    @property
    def covering(self) -> MultiPolygon:
        if self._cov is None:
            self._cov = erosion(reflect(self.B), self.A)
        return self._cov

    def base_for(self, kind: FamilyKind) -> MultiPolygon:
        if kind in (FamilyKind.GAMMA1_F, FamilyKind.GAMMA2_F):
            return self.co.region
        if kind in (FamilyKind.H1_F, FamilyKind.H2_F, FamilyKind.M1_F):
            base = self.containment
        elif kind in (FamilyKind.DELTA1_F, FamilyKind.DELTA2_F, FamilyKind.M2_F):
            base = self.covering
        else:  # M3_F uses both; report on the containment side
            base = self.containment
        if base.is_empty and kind not in _MU_KINDS:
            raise UndefinedDistanceError(
                f"family {kind.value} undefined: erosion base is empty"
            )
        return base

    def meta_for(self, kind: FamilyKind) -> BaseMeta:
        base = self.base_for(kind)
        key = kind.value if kind in _MU_KINDS and base.is_empty else id(base)
        skey = str(key)
        if skey not in self._meta:
            self._meta[skey] = BaseMeta(base, self._inradius_tol)
        return self._meta[skey]

    # -- single-object offsets used by the mu families ----------------------

    def _gamma_offset(self, X: MultiPolygon, lam: float) -> MultiPolygon:
        d = self.disk
        if lam > 0:
            return dilate_disk(X, ApproxDisk(lam, d.segments, d.dilate_mode))
        if lam == 0:
            return X
        return erode_disk(X, ApproxDisk(-lam, d.segments, d.erode_mode))

    # -- slice construction --------------------------------------------------

    def slice(self, kind: FamilyKind, lam: float) -> FamilySlice:
        key = (kind, float(lam))
        if key not in self._slices:
            self._slices[key] = self._build_slice(kind, float(lam))
        return self._slices[key]

    def _build_slice(self, kind: FamilyKind, lam: float) -> FamilySlice:
        base = self.base_for(kind)
        meta = self.meta_for(kind)
        err = self.disk.error_at(lam)
        if kind in _OFFSET_KINDS:
            region = self._gamma_offset(base, lam)
        elif kind in _INTERSECT_KINDS:
            region = self._disk_intersection(base, lam)
        elif kind is FamilyKind.M1_F:
            region = self._mu_slice_region(self.A, reflect(self.B), lam)
        elif kind is FamilyKind.M2_F:
            region = self._mu_slice_region(reflect(self.B), self.A, lam)
        else:  # M3_F
            r1 = self._mu_slice_region(self.A, reflect(self.B), lam)
            r2 = self._mu_slice_region(reflect(self.B), self.A, lam)
            if r1.is_empty or r2.is_empty:
                region = MultiPolygon.empty()
            else:
                region = _regularize(r1.shapely.intersection(r2.shapely))
        return FamilySlice(kind, lam, region, base, meta, err)

    def _mu_slice_region(self, X: MultiPolygon, Ycheck: MultiPolygon, lam: float) -> MultiPolygon:
        """Sublevel region of the directed distance: erosion of the
        lambda-offset of X by Ycheck (already reflected by the caller)."""
        off = self._gamma_offset(X, lam)
        if off.is_empty:
            return off
        return erosion(off, Ycheck)

    def _disk_intersection(self, base: MultiPolygon, lam: float) -> MultiPolygon:
        meta = self.meta_for_base(base)
        if lam < meta.R_base - self.disk.error_at(lam) - EPS:
            return MultiPolygon.empty()
        # The slice at the exact circumradius is a single point (the center of
        # the smallest enclosing circle); a sliver of padding keeps it from
        # degenerating to measure zero. The pad stays far below the chord
        # error carried in error_bound.
        pad = 1e-6 * max(1.0, lam)
        disk = ApproxDisk(lam + pad, self.disk.segments,
                          DiskMode.CIRCUMSCRIBED).polygon().shapely
        acc = None
        for p in extreme_points(base):
            off = np.array([p.x, p.y])
            placed = shapely.transform(disk, lambda c: c + off)
            acc = placed if acc is None else acc.intersection(placed)
            if acc.is_empty:
                break
        return _regularize(acc)

    def meta_for_base(self, base: MultiPolygon) -> BaseMeta:
        skey = str(id(base))
        if skey not in self._meta:
            self._meta[skey] = BaseMeta(base, self._inradius_tol)
        return self._meta[skey]

    # -- extreme parameters ---------------------------------------------------

    def extreme_lambda(self, kind: FamilyKind, tol: float = 1e-4) -> float:
        """The attainable minimum of the distance over all translations:
        minus the base inradius for min-type kinds, the base circumradius for
        max-type kinds, and a bisection over slice emptiness for the
        Hausdorff kinds when no closed form applies."""
        if kind in _OFFSET_KINDS:
            return -self.meta_for(kind).r_base
        if kind in _INTERSECT_KINDS:
            return self.meta_for(kind).R_base
        if kind is FamilyKind.M1_F and not self.containment.is_empty:
            return -self.meta_for(FamilyKind.H1_F).r_base
        if kind is FamilyKind.M2_F and not self.covering.is_empty:
            return -self.meta_for(FamilyKind.DELTA1_F).r_base
        return self._extreme_by_emptiness(kind, tol)

    def _extreme_by_emptiness(self, kind: FamilyKind, tol: float) -> float:
        from .distances import d2

        hi = d2(self.A, self.B) + 1.0
        lo = -smallest_enclosing_circle(self.A)[1] - 1.0
        if self.slice(kind, hi).region.is_empty:  # pragma: no cover - safety net
            raise UndefinedDistanceError(f"family {kind.value} empty at lambda={hi}")
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            if self.slice(kind, mid).region.is_empty:
                lo = mid
            else:
                hi = mid
        return hi


# ---------------------------------------------------------------------------
# Module-level constructors matching the one-call-per-slice surface


def gamma1_family(A: MultiPolygon, B: MultiPolygon, lam: float,
                  disk: DiskConfig = DiskConfig()) -> FamilySlice:
    return PairCache(B, A, disk).slice(FamilyKind.GAMMA1_F, lam)


def gamma2_family(A: MultiPolygon, B: MultiPolygon, lam: float,
                  disk: DiskConfig = DiskConfig()) -> FamilySlice:
    return PairCache(B, A, disk).slice(FamilyKind.GAMMA2_F, lam)


def h_family(A: MultiPolygon, B: MultiPolygon, i: int, lam: float,
             disk: DiskConfig = DiskConfig()) -> FamilySlice:
    kind = FamilyKind.H1_F if i == 1 else FamilyKind.H2_F
    return PairCache(B, A, disk).slice(kind, lam)


def delta_family(A: MultiPolygon, B: MultiPolygon, i: int, lam: float,
                 disk: DiskConfig = DiskConfig()) -> FamilySlice:
    kind = FamilyKind.DELTA1_F if i == 1 else FamilyKind.DELTA2_F
    return PairCache(B, A, disk).slice(kind, lam)


def m_family(A: MultiPolygon, B: MultiPolygon, i: int, lam: float,
             disk: DiskConfig = DiskConfig()) -> FamilySlice:
    kind = (FamilyKind.M1_F, FamilyKind.M2_F, FamilyKind.M3_F)[i - 1]
    return PairCache(B, A, disk).slice(kind, lam)


def extreme_lambda(A: MultiPolygon, B: MultiPolygon, kind: FamilyKind,
                   disk: DiskConfig = DiskConfig()) -> float:
    return PairCache(B, A, disk).extreme_lambda(kind)
