"""Brute-force reference implementations used to cross-check the fast paths.

Everything here is computed from first definitions with hand-rolled
primitives (ray-casting point membership, exact segment arithmetic, ear
clipping, hulls of pairwise vertex sums, grid scans) and deliberately shares
no geometry code with the rest of the package. Complexities are O(n^2) to
O(n^3); callers keep scenes small.

`oracle_map` rasterizes a constraint over the configuration window by
pointwise evaluation; it is the grid ground truth the region backend is
compared against.
"""

import math
from dataclasses import dataclass

import numpy as np

from .distances import DistanceKind
from .errors import EmptyInputError, UndefinedDistanceError
from .geom import MultiPolygon, Point
from .scene import Scene
from .tgs import TgsExpr, configuration_window, eval_grid

_TOL = 1e-9


# ---------------------------------------------------------------------------
# Hand-rolled primitives (numpy, no shapely)


def _all_edges(mp: MultiPolygon) -> np.ndarray:
    """(E, 4) array of segments x1,y1,x2,y2 over every ring."""
    segs = []
    for ring in mp.rings():
        c = ring.coords()
        n = len(c)
        for i in range(n):
            x1, y1 = c[i]
            x2, y2 = c[(i + 1) % n]
            segs.append((x1, y1, x2, y2))
    return np.array(segs, dtype=float)


def _verts(mp: MultiPolygon) -> np.ndarray:
    return np.array([p.as_tuple() for p in mp.vertices()], dtype=float)


def _pip(edges: np.ndarray, pts: np.ndarray) -> np.ndarray:
    """Ray-casting parity over all rings: True for points inside the region
    (holes handled by parity). Boundary points are resolved arbitrarily; use
    `_dist_to_edges` when boundary tolerance matters."""
    x1, y1, x2, y2 = edges[:, 0], edges[:, 1], edges[:, 2], edges[:, 3]
    px = pts[:, 0][:, None]
    py = pts[:, 1][:, None]
    cond = (y1[None, :] > py) != (y2[None, :] > py)
    with np.errstate(divide="ignore", invalid="ignore"):
        xi = (x2 - x1)[None, :] * (py - y1[None, :]) / (y2 - y1)[None, :] + x1[None, :]
    crossing = cond & (px < xi)
    return (np.sum(crossing, axis=1) % 2).astype(bool)


def _dist_to_edges(edges: np.ndarray, pts: np.ndarray) -> np.ndarray:
    """Min distance from each point to the segment set."""
    ax, ay = edges[:, 0][None, :], edges[:, 1][None, :]
    bx, by = edges[:, 2][None, :], edges[:, 3][None, :]
    px, py = pts[:, 0][:, None], pts[:, 1][:, None]
    dx, dy = bx - ax, by - ay
    ln2 = dx * dx + dy * dy
    t = ((px - ax) * dx + (py - ay) * dy) / np.where(ln2 == 0, 1.0, ln2)
    t = np.clip(t, 0.0, 1.0)
    cx, cy = ax + t * dx, ay + t * dy
    return np.min(np.hypot(px - cx, py - cy), axis=1)


def _in_closed(mp_edges: np.ndarray, pts: np.ndarray, tol: float = _TOL) -> np.ndarray:
    return _pip(mp_edges, pts) | (_dist_to_edges(mp_edges, pts) <= tol)


def _orient(ax, ay, bx, by, cx, cy):
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)


def _segments_cross(s1: np.ndarray, s2: np.ndarray) -> bool:
    """Proper or improper intersection of two segment sets (any pair)."""
    a1x, a1y, b1x, b1y = s1[:, 0], s1[:, 1], s1[:, 2], s1[:, 3]
    a2x, a2y, b2x, b2y = s2[:, 0], s2[:, 1], s2[:, 2], s2[:, 3]
    A1x, A1y = a1x[:, None], a1y[:, None]
    B1x, B1y = b1x[:, None], b1y[:, None]
    A2x, A2y = a2x[None, :], a2y[None, :]
    B2x, B2y = b2x[None, :], b2y[None, :]
    d1 = _orient(A1x, A1y, B1x, B1y, A2x, A2y)
    d2 = _orient(A1x, A1y, B1x, B1y, B2x, B2y)
    d3 = _orient(A2x, A2y, B2x, B2y, A1x, A1y)
    d4 = _orient(A2x, A2y, B2x, B2y, B1x, B1y)
    proper = ((d1 > 0) != (d2 > 0)) & ((d3 > 0) != (d4 > 0)) \
        & (d1 != 0) & (d2 != 0) & (d3 != 0) & (d4 != 0)
    return bool(np.any(proper))


def _min_seg_seg(s1: np.ndarray, s2: np.ndarray) -> float:
    """Exact minimum distance between two segment sets."""
    if _segments_cross(s1, s2):
        return 0.0
    ends1 = np.vstack([s1[:, 0:2], s1[:, 2:4]])
    ends2 = np.vstack([s2[:, 0:2], s2[:, 2:4]])
    return float(min(np.min(_dist_to_edges(s2, ends1)),
                     np.min(_dist_to_edges(s1, ends2))))


def _hull_of(pts: np.ndarray) -> np.ndarray:
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    sorted_pts = [tuple(pts[i]) for i in order]
    uniq = []
    for p in sorted_pts:
        if not uniq or p != uniq[-1]:
            uniq.append(p)
    if len(uniq) <= 2:
        return np.array(uniq)

    def half(seq):
        chain = []
        for pt in seq:
            while len(chain) >= 2 and _orient(chain[-2][0], chain[-2][1],
                                              chain[-1][0], chain[-1][1],
                                              pt[0], pt[1]) <= 0:
                chain.pop()
            chain.append(pt)
        return chain

    lower = half(uniq)
    upper = half(list(reversed(uniq)))
    return np.array(lower[:-1] + upper[:-1])


def _earclip(coords: list[tuple[float, float]]) -> list[np.ndarray]:
    """Triangulate a simple hole-free polygon (CCW) by ear clipping."""
    pts = list(coords)
    if _ring_area(pts) < 0:
        pts.reverse()
    tris = []
    idx = list(range(len(pts)))
    guard = 0
    while len(idx) > 3 and guard < 10000:
        guard += 1
        n = len(idx)
        clipped = False
        for k in range(n):
            i0, i1, i2 = idx[(k - 1) % n], idx[k], idx[(k + 1) % n]
            a, b, c = pts[i0], pts[i1], pts[i2]
            if _orient(*a, *b, *c) <= 0:
                continue
            tri = np.array([a, b, c])
            ok = True
            for j in idx:
                if j in (i0, i1, i2):
                    continue
                if _point_in_tri(tri, pts[j]):
                    ok = False
                    break
            if ok:
                tris.append(tri)
                idx.pop(k)
                clipped = True
                break
        if not clipped:  # numerically stuck: drop the flattest vertex
            flat = min(range(len(idx)), key=lambda k: abs(_orient(
                *pts[idx[(k - 1) % len(idx)]], *pts[idx[k]],
                *pts[idx[(k + 1) % len(idx)]])))
            idx.pop(flat)
    if len(idx) == 3:
        tris.append(np.array([pts[idx[0]], pts[idx[1]], pts[idx[2]]]))
    return tris


def _point_in_tri(tri: np.ndarray, p) -> bool:
    d0 = _orient(tri[0, 0], tri[0, 1], tri[1, 0], tri[1, 1], p[0], p[1])
    d1 = _orient(tri[1, 0], tri[1, 1], tri[2, 0], tri[2, 1], p[0], p[1])
    d2 = _orient(tri[2, 0], tri[2, 1], tri[0, 0], tri[0, 1], p[0], p[1])
    return (d0 >= 0) and (d1 >= 0) and (d2 >= 0)


def _ring_area(pts) -> float:
    s = 0.0
    n = len(pts)
    for i in range(n):
        x0, y0 = pts[i]
        x1, y1 = pts[(i + 1) % n]
        s += x0 * y1 - x1 * y0
    return 0.5 * s


def _is_convex_ring(pts) -> bool:
    n = len(pts)
    for i in range(n):
        if _orient(*pts[i], *pts[(i + 1) % n], *pts[(i + 2) % n]) < -1e-12:
            return False
    return True


def _triangulate(mp: MultiPolygon) -> list[np.ndarray]:
    parts = []
    for outer, holes in mp.polys:
        if holes:
            raise EmptyInputError(
                "oracle triangulation handles hole-free polygons only")
        coords = outer.coords()
        if _is_convex_ring(coords):
            parts.append(np.array(coords))
        else:
            parts.extend(_earclip(coords))
    return parts


def _boundary_samples(mp: MultiPolygon, step: float) -> np.ndarray:
    pts = []
    for ring in mp.rings():
        c = ring.coords()
        n = len(c)
        for i in range(n):
            x0, y0 = c[i]
            x1, y1 = c[(i + 1) % n]
            seg = math.hypot(x1 - x0, y1 - y0)
            k = max(1, int(math.ceil(seg / step)))
            for t in range(k):
                f = t / k
                pts.append((x0 + f * (x1 - x0), y0 + f * (y1 - y0)))
    return np.array(pts)


def _object_samples(mp: MultiPolygon, step: float) -> np.ndarray:
    """Boundary samples plus a sparse interior grid (catches holes of the
    other operand swallowing this one)."""
    pts = [_boundary_samples(mp, step)]
    x0, y0, x1, y1 = mp.bounds
    pitch = max(step * 8, min(x1 - x0, y1 - y0) / 12 or step)
    xs = np.arange(x0 + pitch / 2, x1, pitch)
    ys = np.arange(y0 + pitch / 2, y1, pitch)
    if len(xs) and len(ys):
        gx, gy = np.meshgrid(xs, ys)
        grid = np.column_stack([gx.ravel(), gy.ravel()])
        inside = _pip(_all_edges(mp), grid)
        if np.any(inside):
            pts.append(grid[inside])
    return np.vstack(pts)


# ---------------------------------------------------------------------------
# Distance oracles


def _overlap_interiors(A: MultiPolygon, B: MultiPolygon) -> bool:
    sa, sb = _all_edges(A), _all_edges(B)
    if _segments_cross(sa, sb):
        return True
    va, vb = _verts(A), _verts(B)
    ina = _pip(sa, vb) & (_dist_to_edges(sa, vb) > _TOL)
    inb = _pip(sb, va) & (_dist_to_edges(sb, va) > _TOL)
    return bool(np.any(ina) or np.any(inb))


def _d1_exact(A: MultiPolygon, B: MultiPolygon) -> float:
    if _overlap_interiors(A, B):
        return 0.0
    return _min_seg_seg(_all_edges(A), _all_edges(B))


def _d2_exact(A: MultiPolygon, B: MultiPolygon) -> float:
    va, vb = _verts(A), _verts(B)
    dx = va[:, None, 0] - vb[None, :, 0]
    dy = va[:, None, 1] - vb[None, :, 1]
    return float(np.max(np.hypot(dx, dy)))


def _co_pieces(A: MultiPolygon, B: MultiPolygon) -> list[np.ndarray]:
    """Convex pieces of the C-space obstacle: hulls of pairwise vertex sums of
    triangles of A and triangles of the reflected B."""
    tris_a = _triangulate(A)
    refl = MultiPolygon.from_polygons(
        [([(-p.x, -p.y) for p in outer.points], []) for outer, _ in B.polys],
        validate=False)
    tris_b = _triangulate(refl)
    pieces = []
    for ta in tris_a:
        for tb in tris_b:
            sums = (ta[:, None, :] + tb[None, :, :]).reshape(-1, 2)
            pieces.append(_hull_of(sums))
    return pieces


def _gamma1_sampled(A: MultiPolygon, B: MultiPolygon, density: float) -> float:
    if not _overlap_interiors(A, B):
        return _d1_exact(A, B)
    pieces = _co_pieces(A, B)
    step = 1.0 / density
    samples = []
    for piece in pieces:
        n = len(piece)
        for i in range(n):
            x0, y0 = piece[i]
            x1, y1 = piece[(i + 1) % n]
            seg = math.hypot(x1 - x0, y1 - y0)
            k = max(1, int(math.ceil(seg / step)))
            for t in range(k + 1):
                f = t / k
                samples.append((x0 + f * (x1 - x0), y0 + f * (y1 - y0)))
    samples = np.array(samples)
    keep = np.ones(len(samples), dtype=bool)
    for piece in pieces:
        edges = np.array([
            [piece[i][0], piece[i][1], piece[(i + 1) % len(piece)][0],
             piece[(i + 1) % len(piece)][1]]
            for i in range(len(piece))])
        inside = _pip(edges, samples) & (_dist_to_edges(edges, samples) > 10 * _TOL)
        keep &= ~inside
    boundary = samples[keep]
    dist = float(np.min(np.hypot(boundary[:, 0], boundary[:, 1])))
    return -dist


def _point_signed_to(A_edges: np.ndarray, pts: np.ndarray) -> np.ndarray:
    d = _dist_to_edges(A_edges, pts)
    inside = _pip(A_edges, pts)
    return np.where(inside, -d, d)


def _mu_sampled(B: MultiPolygon, A: MultiPolygon, density: float) -> float:
    samples = _object_samples(B, 1.0 / density)
    return float(np.max(_point_signed_to(_all_edges(A), samples)))


def _contains_all(A_edges: np.ndarray, pts: np.ndarray) -> bool:
    return bool(np.all(_in_closed(A_edges, pts)))


def _inner_grid(
    inner: MultiPolygon, outer: MultiPolygon, density: float
) -> tuple[np.ndarray, np.ndarray, float]:
    """Membership of translations q with inner+q contained in outer, on a grid
    covering the interval bound of the erosion. Returns (grid pts, mask, pitch)."""
    ix0, iy0, ix1, iy1 = inner.bounds
    ox0, oy0, ox1, oy1 = outer.bounds
    qx0, qx1 = ox0 - ix0, ox1 - ix1
    qy0, qy1 = oy0 - iy0, oy1 - iy1
    if qx1 < qx0 or qy1 < qy0:
        return np.empty((0, 2)), np.empty(0, dtype=bool), 0.0
    pitch = max(1.0 / density, max(qx1 - qx0, qy1 - qy0) / 160 if
                max(qx1 - qx0, qy1 - qy0) > 0 else 1.0 / density)
    xs = np.arange(qx0 - pitch, qx1 + pitch * 1.5, pitch)
    ys = np.arange(qy0 - pitch, qy1 + pitch * 1.5, pitch)
    gx, gy = np.meshgrid(xs, ys)
    grid = np.column_stack([gx.ravel(), gy.ravel()])
    samples = _object_samples(inner, 1.0 / density)
    edges = _all_edges(outer)
    mask = np.empty(len(grid), dtype=bool)
    chunk = max(1, int(2_000_000 / max(len(samples), 1)))
    for i in range(0, len(grid), chunk):
        block = grid[i:i + chunk]
        pts = (block[:, None, :] + samples[None, :, :]).reshape(-1, 2)
        ok = _in_closed(edges, pts, tol=1e-7).reshape(len(block), -1)
        mask[i:i + chunk] = np.all(ok, axis=1)
    return grid, mask, pitch


def _grid_signed_and_max(grid: np.ndarray, mask: np.ndarray, pitch: float
                         ) -> tuple[float, float]:
    """Signed distance from the origin to the membership boundary, and the
    farthest boundary radius, both to grid accuracy."""
    if not np.any(mask):
        raise UndefinedDistanceError("erosion base empty (oracle grid)")
    member = grid[mask]
    non = grid[~mask]
    radii_m = np.hypot(member[:, 0], member[:, 1])
    origin_member = bool(np.min(radii_m) <= pitch * 0.75)
    # boundary members: those with a non-member neighbor
    dist_to_non = np.full(len(member), np.inf)
    if len(non):
        chunk = max(1, int(4_000_000 / max(len(non), 1)))
        for i in range(0, len(member), chunk):
            dx = member[i:i + chunk, 0][:, None] - non[None, :, 0]
            dy = member[i:i + chunk, 1][:, None] - non[None, :, 1]
            dist_to_non[i:i + chunk] = np.min(np.hypot(dx, dy), axis=1)
    boundary = member[dist_to_non <= 1.5 * pitch]
    if len(boundary) == 0:
        boundary = member
    b_radii = np.hypot(boundary[:, 0], boundary[:, 1])
    first = float(np.min(b_radii))
    if origin_member:
        first = -first
    second = float(np.max(b_radii))
    return first, second


def oracle_distance(kind, A: MultiPolygon, B: MultiPolygon, p: Point,
                    density: float = 64.0) -> float:
    """Distance of the given kind between B translated by p and A, computed
    from first definitions. `density` is samples per unit boundary length."""
    if isinstance(kind, str):
        kind = DistanceKind(kind)
    if A.is_empty or B.is_empty:
        raise EmptyInputError("oracle on empty region")
    Bt = B.translated(p)
    if kind is DistanceKind.D1:
        return _d1_exact(A, Bt)
    if kind is DistanceKind.D2:
        return _d2_exact(A, Bt)
    if kind is DistanceKind.GAMMA1:
        return _gamma1_sampled(A, Bt, density)
    if kind is DistanceKind.GAMMA2:
        return _d2_exact(A, Bt)
    if kind in (DistanceKind.ETA1, DistanceKind.ETA2, DistanceKind.DSTAR):
        grid, mask, pitch = _inner_grid(Bt, A, density)
        if not np.any(mask):
            raise UndefinedDistanceError("containment impossible (oracle)")
        contained = _contains_all(_all_edges(A), _object_samples(Bt, 1.0 / density))
        if kind is DistanceKind.DSTAR:
            if not contained:
                return 0.0
            return _min_seg_seg(_all_edges(A), _all_edges(Bt))
        e1, e2 = _grid_signed_and_max(grid, mask, pitch)
        if kind is DistanceKind.ETA2:
            return e2
        if contained:
            return -_min_seg_seg(_all_edges(A), _all_edges(Bt))
        return e1
    if kind in (DistanceKind.DELTA1, DistanceKind.DELTA2):
        # covering: translations q with A contained in Bt+q, i.e. the grid of
        # the reflected problem; reuse by swapping roles through reflection
        reflB = MultiPolygon.from_polygons(
            [([(-q.x, -q.y) for q in outer.points], []) for outer, _ in Bt.polys],
            validate=False)
        grid, mask, pitch = _inner_grid(A, reflB, density)
        if not np.any(mask):
            raise UndefinedDistanceError("covering impossible (oracle)")
        d1v, d2v = _grid_signed_and_max(grid, mask, pitch)
        if kind is DistanceKind.DELTA2:
            return d2v
        covered = _contains_all(_all_edges(Bt), _object_samples(A, 1.0 / density))
        if covered:
            return -_min_seg_seg(_all_edges(A), _all_edges(Bt))
        return d1v
    if kind is DistanceKind.MU_BA:
        return _mu_sampled(Bt, A, density)
    if kind is DistanceKind.MU_AB:
        return _mu_sampled(A, Bt, density)
    if kind is DistanceKind.HAUS:
        return max(_mu_sampled(Bt, A, density), _mu_sampled(A, Bt, density))
    raise ValueError(f"no oracle for kind {kind}")


# ---------------------------------------------------------------------------
# Grid map


@dataclass(frozen=True)
class Bitmap:
    codes: np.ndarray  # (ny, nx) int8: 1 true, 0 false, 2 ambiguous
    bounds: tuple[float, float, float, float]

    @property
    def cell(self) -> tuple[float, float]:
        ny, nx = self.codes.shape
        x0, y0, x1, y1 = self.bounds
        return ((x1 - x0) / nx, (y1 - y0) / ny)

    def cell_centers(self) -> np.ndarray:
        ny, nx = self.codes.shape
        x0, y0, x1, y1 = self.bounds
        cw, ch = self.cell
        xs = x0 + cw * (np.arange(nx) + 0.5)
        ys = y0 + ch * (np.arange(ny) + 0.5)
        gx, gy = np.meshgrid(xs, ys)
        return np.column_stack([gx.ravel(), gy.ravel()])

    def true_fraction(self) -> float:
        return float(np.mean(self.codes == 1))

    def to_pgm(self, path: str):
        ny, nx = self.codes.shape
        gray = np.where(self.codes == 1, 255,
                        np.where(self.codes == 2, 128, 0)).astype(np.uint8)
        with open(path, "wb") as fh:
            fh.write(f"P5\n{nx} {ny}\n255\n".encode())
            fh.write(gray[::-1].tobytes())  # north-up image

    def component_count(self) -> int:
        return flood_components(self.codes == 1)


def flood_components(mask: np.ndarray) -> int:
    """4-connected component count of a boolean raster."""
    visited = np.zeros_like(mask, dtype=bool)
    ny, nx = mask.shape
    count = 0
    for sy in range(ny):
        for sx in range(nx):
            if not mask[sy, sx] or visited[sy, sx]:
                continue
            count += 1
            stack = [(sy, sx)]
            visited[sy, sx] = True
            while stack:
                y, x = stack.pop()
                for yy, xx in ((y - 1, x), (y + 1, x), (y, x - 1), (y, x + 1)):
                    if 0 <= yy < ny and 0 <= xx < nx and mask[yy, xx] \
                            and not visited[yy, xx]:
                        visited[yy, xx] = True
                        stack.append((yy, xx))
    return count


def oracle_map(e: TgsExpr, scene: Scene, grid: int = 200,
               window: tuple[float, float, float, float] | None = None,
               with_margin: bool = False):
    """Pointwise truth raster of the constraint over the configuration window
    (every cell is an eval_point outcome)."""
    if grid < 50:
        raise ValueError("oracle_map needs a grid of at least 50 per side")
    win = window or configuration_window(e, scene)
    x0, y0, x1, y1 = win
    xs = x0 + (x1 - x0) * (np.arange(grid) + 0.5) / grid
    ys = y0 + (y1 - y0) * (np.arange(grid) + 0.5) / grid
    gx, gy = np.meshgrid(xs, ys)
    pts = np.column_stack([gx.ravel(), gy.ravel()])
    if with_margin:
        codes, margins, diags = eval_grid(e, scene, pts, with_margin=True)
        return Bitmap(codes.reshape(grid, grid), win), \
            margins.reshape(grid, grid), diags
    codes, _ = eval_grid(e, scene, pts)
    return Bitmap(codes.reshape(grid, grid), win)
