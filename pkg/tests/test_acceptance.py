"""Acceptance suite: one test per criterion, each printing a PASS line with
its measured numbers (run with -s to see them inline).

Criteria:
  1 box Minkowski algebra exact to 1e-12, under a second
  2 overlap/containment/covering dualities on sampled translations
  3 distance identities and rigid-motion invariance
  4 distance-vs-family-slice correspondence for all nine kinds
  5 extreme parameters (inradius, enclosing circle, containment minimum)
  6 worked constraint examples (annulus flags, curve solutions, minima)
  7 preset end-to-end region-vs-raster agreement with component counts
  8 parser round-trips and normalizer pointwise soundness
"""

import math
import time

import numpy as np

from cspacemap import distances as D
from cspacemap.cli import backend_agreement
from cspacemap.errors import UndefinedDistanceError
from cspacemap.families import FamilyKind, PairCache
from cspacemap.geom import (
    MultiPolygon,
    Point,
    classify_points,
    convex_hull,
    extreme_points,
    inradius,
    reflect,
    smallest_enclosing_circle,
)
from cspacemap.minkowski import erosion, mink_sum
from cspacemap.oracle import _all_edges, _pip, oracle_distance
from cspacemap.region import Membership, nr_classify
from cspacemap.scene import Scene, load_scene
from cspacemap.tgs import eval_point, eval_region, normalize, parse, print_expr, \
    preset_expression

from conftest import data_path, random_box, star_polygon, vertex_set


def report(num, ok, detail):
    status = "PASS" if ok else "FAIL"
    print(f"\nACCEPTANCE {num}: {status} - {detail}")
    assert ok, f"criterion {num}: {detail}"


# ---------------------------------------------------------------------------


def test_criterion_1_box_algebra(rng):
    t0 = time.time()
    worst_sum = worst_ero = 0.0
    for _ in range(100):
        a = random_box(rng)
        b = random_box(rng)
        got = vertex_set(mink_sum(a, b).region, 15)
        ax0, ay0, ax1, ay1 = a.bounds
        bx0, by0, bx1, by1 = b.bounds
        want = {(ax0 + bx0, ay0 + by0), (ax1 + bx1, ay0 + by0),
                (ax1 + bx1, ay1 + by1), (ax0 + bx0, ay1 + by1)}
        worst_sum = max(worst_sum, _set_distance(got, want))

        ero = erosion(a, b)
        lox, hix = ax0 + bx1, ax1 + bx0
        loy, hiy = ay0 + by1, ay1 + by0
        if hix <= lox or hiy <= loy:
            assert ero.is_empty
        else:
            got_e = vertex_set(ero, 15)
            want_e = {(lox, loy), (hix, loy), (hix, hiy), (lox, hiy)}
            worst_ero = max(worst_ero, _set_distance(got_e, want_e))
    dt = time.time() - t0
    ok = worst_sum <= 1e-12 and worst_ero <= 1e-12 and dt < 1.0
    report(1, ok, f"100 box pairs: sum dev {worst_sum:.2e}, erosion dev "
                  f"{worst_ero:.2e}, {dt:.2f}s")


def _set_distance(got: set, want: set) -> float:
    if len(got) != len(want):
        return float("inf")
    worst = 0.0
    for g in got:
        best = min(math.hypot(g[0] - w[0], g[1] - w[1]) for w in want)
        worst = max(worst, best)
    return worst


# ---------------------------------------------------------------------------


def _direct_predicates(A, B, pts, chunk=800):
    """Overlap / containment / covering of B translated by each point against
    A, from first principles (orientation tests and ray casting only)."""
    segsA = _all_edges(A)
    segsB = _all_edges(B)
    vA = np.array([p.as_tuple() for p in A.vertices()])
    vB = np.array([p.as_tuple() for p in B.vertices()])
    a1, a2 = segsA[:, :2], segsA[:, 2:]
    b1, b2 = segsB[:, :2], segsB[:, 2:]
    eB = b2 - b1                       # (EB,2)
    fA = a2 - a1                       # (EA,2)
    n = len(pts)
    overlap = np.zeros(n, bool)
    contain = np.zeros(n, bool)
    cover = np.zeros(n, bool)
    for i in range(0, n, chunk):
        p = pts[i:i + chunk]
        m = len(p)
        # d1/d2: orientation of (b1+p, b2+p) against a1 / a2
        wx = a1[None, None, :, 0] - b1[None, :, None, 0] - p[:, None, None, 0]
        wy = a1[None, None, :, 1] - b1[None, :, None, 1] - p[:, None, None, 1]
        d1 = eB[None, :, None, 0] * wy - eB[None, :, None, 1] * wx
        wx = a2[None, None, :, 0] - b1[None, :, None, 0] - p[:, None, None, 0]
        wy = a2[None, None, :, 1] - b1[None, :, None, 1] - p[:, None, None, 1]
        d2 = eB[None, :, None, 0] * wy - eB[None, :, None, 1] * wx
        ux = b1[None, :, None, 0] + p[:, None, None, 0] - a1[None, None, :, 0]
        uy = b1[None, :, None, 1] + p[:, None, None, 1] - a1[None, None, :, 1]
        d3 = fA[None, None, :, 0] * uy - fA[None, None, :, 1] * ux
        ux = b2[None, :, None, 0] + p[:, None, None, 0] - a1[None, None, :, 0]
        uy = b2[None, :, None, 1] + p[:, None, None, 1] - a1[None, None, :, 1]
        d4 = fA[None, None, :, 0] * uy - fA[None, None, :, 1] * ux
        proper = (((d1 > 0) != (d2 > 0)) & ((d3 > 0) != (d4 > 0))
                  & (d1 != 0) & (d2 != 0) & (d3 != 0) & (d4 != 0))
        crosses = proper.any(axis=(1, 2))
        # vertex containments via parity
        vb_moved = (vB[None, :, :] + p[:, None, :]).reshape(-1, 2)
        b_in_a = _pip(segsA, vb_moved).reshape(m, -1)
        va_moved = (vA[None, :, :] - p[:, None, :]).reshape(-1, 2)
        a_in_b = _pip(segsB, va_moved).reshape(m, -1)
        overlap[i:i + chunk] = crosses | b_in_a.any(axis=1) | a_in_b.any(axis=1)
        contain[i:i + chunk] = ~crosses & b_in_a.all(axis=1)
        cover[i:i + chunk] = ~crosses & a_in_b.all(axis=1)
    return overlap, contain, cover


def test_criterion_2_duality_suite(rng):
    t0 = time.time()
    worst = 1.0
    pairs = 0
    while pairs < 20:
        A = star_polygon(rng, int(rng.integers(6, 16)), *rng.uniform(-1, 1, 2),
                         rng.uniform(0.8, 2.0))
        B = star_polygon(rng, int(rng.integers(6, 16)), *rng.uniform(-1, 1, 2),
                         rng.uniform(0.4, 1.2))
        pairs += 1
        co = mink_sum(A, reflect(B)).region
        ero = erosion(A, reflect(B))
        cov = erosion(reflect(B), A)
        x0, y0, x1, y1 = co.bounds
        pts = rng.uniform((x0 - 1, y0 - 1), (x1 + 1, y1 + 1), size=(10_000, 2))
        overlap, contain, cover = _direct_predicates(A, B, pts)

        for region, predicate in ((co, overlap), (ero, contain), (cov, cover)):
            if region.is_empty:
                assert not predicate.any()
                continue
            codes = classify_points(region, pts, eps=1e-7)
            clear = codes != 0
            agree = (codes[clear] == 1) == predicate[clear]
            worst = min(worst, float(np.mean(agree)))
    dt = time.time() - t0
    ok = worst >= 0.999 and dt < 60.0
    report(2, ok, f"20 pairs x 10k points: worst agreement {worst:.5f}, {dt:.1f}s")


# ---------------------------------------------------------------------------


def test_criterion_3_distance_identities(rng):
    t0 = time.time()
    # gamma1 = d1 on disjoint pairs vs the exact edge-pair oracle
    worst_g1 = 0.0
    n_disjoint = 0
    while n_disjoint < 30:
        A = star_polygon(rng, 10, -2.6, rng.uniform(-1, 1))
        B = star_polygon(rng, 9, 2.6, rng.uniform(-1, 1))
        d1_oracle = oracle_distance("d1", A, B, Point(0, 0))
        if d1_oracle <= 0:
            continue
        n_disjoint += 1
        worst_g1 = max(worst_g1, abs(D.gamma1(B, A).value - d1_oracle))

    # gamma2 = d2 exactly
    worst_g2 = 0.0
    for _ in range(30):
        A = star_polygon(rng, 9, *rng.uniform(-2, 2, 2))
        B = star_polygon(rng, 8, *rng.uniform(-2, 2, 2))
        worst_g2 = max(worst_g2, abs(D.gamma2(B, A) - D.d2(B, A)))

    # delta(B, A) = eta of the reflections
    worst_sym = 0.0
    checked_sym = 0
    for _ in range(20):
        Bbig = star_polygon(rng, 9, scale=3.0)
        Asm = star_polygon(rng, 7, 0.2, 0.1, 0.5)
        try:
            d1v, d2v = D.delta(Bbig, Asm)
        except UndefinedDistanceError:
            continue
        e1v, e2v = D.eta(reflect(Asm), reflect(Bbig))
        worst_sym = max(worst_sym, abs(d1v.value - e1v.value), abs(d2v - e2v))
        checked_sym += 1

    # mu: bisection vs sampling within twice the chord error
    from cspacemap.distances import _canonical_pose, _mu_bisect, _mu_sampled

    worst_mu = 0.0
    mu_pairs = [
        (MultiPolygon.box(0, 0, 2, 1), MultiPolygon.box(0, 0, 1, 1)),
        (MultiPolygon.box(1, 1, 2, 2), MultiPolygon.box(0, 0, 4, 4)),
    ]
    for _ in range(6):
        hull = convex_hull(star_polygon(rng, 10, scale=2.0))
        mu_pairs.append((star_polygon(rng, 7, 0.3, 0.2, 0.7),
                         MultiPolygon(((hull, ()),))))
    for B, A in mu_pairs:
        B2, A2, _, _ = _canonical_pose(B, A)
        sampled, _, _ = _mu_sampled(B2, A2, 512.0, 40)
        chord = abs(sampled) * (1 / math.cos(math.pi / 64) - 1) + 1e-9
        bis = _mu_bisect(B2, A2, 64, tol=max(1e-6, chord / 4))
        excess = abs(bis - sampled) - max(2 * chord, 1e-4)
        worst_mu = max(worst_mu, excess)

    # rigid-motion invariance for every kind, 100 motions spread over pair
    # configurations that keep each kind defined
    worst_motion = 0.0
    A_gen = star_polygon(rng, 10, scale=2.2)
    B_gen = star_polygon(rng, 7, 0.4, 0.1, 0.6)
    base_gen = {
        "d1": D.d1(A_gen, B_gen), "d2": D.d2(A_gen, B_gen),
        "gamma1": D.gamma1(B_gen, A_gen).value, "gamma2": D.gamma2(B_gen, A_gen),
        "mu": D.mu(B_gen, A_gen).value, "hdir": D.mu(A_gen, B_gen).value,
    }
    base_gen["haus"] = max(base_gen["mu"], base_gen["hdir"])
    A_in, B_in = MultiPolygon.box(-2, -1.5, 2, 1.5), star_polygon(rng, 7, 0, 0, 0.5)
    e1, e2 = D.eta(B_in, A_in)
    base_in = {"eta1": e1.value, "eta2": e2, "dstar": D.dstar(A_in, B_in)}
    B_cov, A_cov = MultiPolygon.box(-2, -2, 2, 2), star_polygon(rng, 7, 0, 0, 0.5)
    dd1, dd2 = D.delta(B_cov, A_cov)
    base_cov = {"delta1": dd1.value, "delta2": dd2}

    for k in range(100):
        th = rng.uniform(0, 2 * math.pi)
        t = Point(*rng.uniform(-4, 4, 2))

        def move(mp):
            return mp.rotated(th).translated(t)

        if k < 40:
            gA, gB = move(A_gen), move(B_gen)
            got = {"d1": D.d1(gA, gB), "d2": D.d2(gA, gB),
                   "gamma1": D.gamma1(gB, gA).value, "gamma2": D.gamma2(gB, gA)}
            if k < 12:  # the Hausdorff kinds cost a bisection each
                got["mu"] = D.mu(gB, gA).value
                got["hdir"] = D.mu(gA, gB).value
                got["haus"] = max(got["mu"], got["hdir"])
            base = base_gen
        elif k < 70:
            gA, gB = move(A_in), move(B_in)
            ge1, ge2 = D.eta(gB, gA)
            got = {"eta1": ge1.value, "eta2": ge2, "dstar": D.dstar(gA, gB)}
            base = base_in
        else:
            gA, gB = move(A_cov), move(B_cov)
            gd1, gd2 = D.delta(gB, gA)
            got = {"delta1": gd1.value, "delta2": gd2}
            base = base_cov
        for key, v in got.items():
            worst_motion = max(worst_motion, abs(v - base[key]))

    dt = time.time() - t0
    ok = (worst_g1 <= 1e-9 and worst_g2 == 0.0 and checked_sym >= 10
          and worst_sym <= 1e-9 and worst_mu <= 0.0 and worst_motion <= 1e-6)
    report(3, ok, f"gamma1=d1 dev {worst_g1:.1e}; gamma2=d2 dev {worst_g2:.1e}; "
                  f"delta=eta(refl) dev {worst_sym:.1e} ({checked_sym} pairs); "
                  f"mu routes within budget (excess {worst_mu:.1e}); "
                  f"motion invariance dev {worst_motion:.1e}; {dt:.1f}s")


# ---------------------------------------------------------------------------


def _field_for(cache, kind, pts):
    from cspacemap.distances import farthest_vertex_batch, signed_distance_batch
    from cspacemap.tgs import _mu_field

    if kind is FamilyKind.GAMMA1_F:
        return signed_distance_batch(cache.co.region, pts)
    if kind is FamilyKind.GAMMA2_F:
        verts = np.array([p.as_tuple() for p in extreme_points(cache.co.region)])
        return farthest_vertex_batch(verts, pts)
    if kind is FamilyKind.H1_F:
        return signed_distance_batch(cache.containment, pts)
    if kind is FamilyKind.H2_F:
        verts = np.array([p.as_tuple() for p in extreme_points(cache.containment)])
        return farthest_vertex_batch(verts, pts)
    if kind is FamilyKind.DELTA1_F:
        return signed_distance_batch(cache.covering, pts)
    if kind is FamilyKind.DELTA2_F:
        verts = np.array([p.as_tuple() for p in extreme_points(cache.covering)])
        return farthest_vertex_batch(verts, pts)
    if kind is FamilyKind.M1_F:
        return _mu_field(cache.B, cache.A, pts, subtract=False)
    if kind is FamilyKind.M2_F:
        return _mu_field(cache.A, cache.B, pts, subtract=True)
    return np.maximum(_mu_field(cache.B, cache.A, pts, subtract=False),
                      _mu_field(cache.A, cache.B, pts, subtract=True))


def _sampling_slack(cache, kind):
    if kind not in (FamilyKind.M1_F, FamilyKind.M2_F, FamilyKind.M3_F):
        return 0.0
    slack = 0.0
    for mp in (cache.A, cache.B):
        x0, y0, x1, y1 = mp.bounds
        slack = max(slack, 0.8 * max(math.hypot(x1 - x0, y1 - y0) / 24, 1e-3))
    return slack


def test_criterion_4_correspondence(rng):
    t0 = time.time()
    total_checked = 0
    violations = 0
    for kind in FamilyKind:
        for draw in range(20):
            if kind in (FamilyKind.DELTA1_F, FamilyKind.DELTA2_F, FamilyKind.M2_F):
                B = star_polygon(rng, int(rng.integers(6, 10)), scale=2.6)
                A = star_polygon(rng, int(rng.integers(6, 10)), 0.2, 0.1, 0.5)
            else:
                A = star_polygon(rng, int(rng.integers(6, 10)), scale=2.0)
                B = star_polygon(rng, int(rng.integers(6, 10)), 0.2, 0.1, 0.55)
            cache = PairCache(B, A)
            if kind in (FamilyKind.GAMMA2_F, FamilyKind.H2_F, FamilyKind.DELTA2_F):
                lam = cache.meta_for(kind).R_base + rng.uniform(0.15, 1.0)
            elif kind in (FamilyKind.M1_F, FamilyKind.M2_F, FamilyKind.M3_F):
                lam = rng.uniform(0.5, 1.6)
            else:
                lam = rng.uniform(-0.2, 1.2)
            s = cache.slice(kind, lam)
            x0, y0, x1, y1 = cache.co.region.bounds
            pts = rng.uniform((x0 - 1.5, y0 - 1.5), (x1 + 1.5, y1 + 1.5),
                              size=(1000, 2))
            vals = _field_for(cache, kind, pts)
            band = s.error_bound + _sampling_slack(cache, kind) \
                + 2e-6 * (1 + abs(lam)) + 1e-7
            if s.region.is_empty:
                codes = np.full(len(pts), -1, dtype=np.int8)
            else:
                codes = classify_points(s.region, pts, eps=1e-9)
            use = (np.abs(vals - lam) > band) & (codes != 0)
            total_checked += int(np.sum(use))
            violations += int(np.sum((vals[use] <= lam) != (codes[use] == 1)))
    dt = time.time() - t0
    ok = violations == 0 and dt < 300.0 and total_checked > 100_000
    report(4, ok, f"9 kinds x 20 draws x 1000 pts: {total_checked} checked, "
                  f"{violations} violations, {dt:.1f}s")


# ---------------------------------------------------------------------------


def test_criterion_5_extremes():
    r, _ = inradius(MultiPolygon.box(0, 0, 1, 1), tol=1e-6)
    c, R = smallest_enclosing_circle(MultiPolygon.box(-1, -1, 1, 1))
    cache = PairCache(MultiPolygon.box(0, 0, 1, 1), MultiPolygon.box(0, 0, 4, 4))
    eta_min = cache.extreme_lambda(FamilyKind.H1_F)
    ok = (abs(r - 0.5) <= 1e-6
          and abs(c.x) <= 1e-9 and abs(c.y) <= 1e-9
          and abs(R - math.sqrt(2)) <= 1e-9
          and abs(eta_min + 1.5) <= 1e-6)
    report(5, ok, f"inradius {r:.8f}; SEC ({c.x:.2e},{c.y:.2e}) R {R:.10f}; "
                  f"eta minimum {eta_min:.8f}")


# ---------------------------------------------------------------------------


def test_criterion_6_examples():
    square_pair = Scene({"A": MultiPolygon.box(0, 0, 1, 1),
                         "B": MultiPolygon.box(0, 0, 1, 1)})
    # Example 1: closed band keeps both boundary circles
    band = eval_region(parse("gamma1(B,A) <= 1 & gamma1(B,A) >= 0.25"), square_pair)
    ex1 = (nr_classify(band, Point(2, 0), 1e-7) is Membership.MEMBER
           and nr_classify(band, Point(1.25, 0), 1e-7) is Membership.MEMBER)
    # Example 1a: open band excludes both
    band_a = eval_region(parse("gamma1(B,A) < 1 & gamma1(B,A) > 0.25"), square_pair)
    ex1a = (nr_classify(band_a, Point(2, 0), 1e-7) is Membership.NON_MEMBER
            and nr_classify(band_a, Point(1.25, 0), 1e-7) is Membership.NON_MEMBER)

    # Example 2 analog: two equality atoms against point-like references give
    # exactly the analytic circle-pair intersection
    s = 0.01
    tiny = MultiPolygon.box(-s, -s, s, s)
    scene2 = Scene({"B": tiny,
                    "A1": tiny,
                    "A2": tiny.translated(Point(1, 0))})
    reg2 = eval_region(parse("gamma1(B,A1) = 1 & gamma1(B,A2) = 1"), scene2)
    pts = [f.points[0] for f in reg2.features if f.kind == "POINT"]
    tol = 1.0 * (1 - math.cos(math.pi / 64)) + 4 * s + 1e-6
    want = [(0.5, math.sqrt(3) / 2), (0.5, -math.sqrt(3) / 2)]
    ex2 = len(pts) == 2 and all(
        min(math.hypot(px - wx, py - wy) for wx, wy in want) <= tol
        for px, py in pts)

    # Example 3: minimal gamma2 with a clearance constraint is a point
    U = MultiPolygon.from_coords(
        [(0, 0), (3, 0), (3, 3), (2, 3), (2, 1), (1, 1), (1, 3), (0, 3)])
    scene3 = Scene({"A": U, "B": MultiPolygon.box(0, 0, 0.5, 0.5)})
    reg3 = eval_region(parse("gamma1(B,A) >= 0.1 & gamma2(B,A) -> min"), scene3)
    ex3 = (not reg3.area.is_empty) and reg3.area.area < 1e-6

    # Example 4: minimal eta1 is a curve (thin erosion witness)
    scene4 = Scene({"R": MultiPolygon.box(0, 0, 3, 2),
                    "B": MultiPolygon.box(0, 0, 1, 1)})
    reg4 = eval_region(parse("eta1(B,R) -> min"), scene4)
    x0, _, x1, _ = reg4.area.bounds
    ex4 = (not reg4.area.is_empty) and reg4.area.area < 1e-4 \
        and (x1 - x0) > 0.9  # stretches along the medial segment

    ok = ex1 and ex1a and ex2 and ex3 and ex4
    report(6, ok, f"annulus flags {ex1}; open variant {ex1a}; "
                  f"curve intersection count {len(pts)}=2 {ex2}; "
                  f"min-point {ex3}; min-curve {ex4}")


# ---------------------------------------------------------------------------


def test_criterion_7_findspace_end_to_end():
    scene = load_scene(data_path("findspace.json"))
    covering = load_scene(data_path("covering.json"))
    runs = [
        ("findspace", scene, {}),
        ("problem3", scene, {"lamR": -0.3, "lam": 0.2}),
        ("problem4", scene, {"l1": 1.5, "l2": 0.5, "form": 1}),
        ("problem4", scene, {"l1": 9.0, "l2": 7.0, "form": 2}),
        ("problem5", covering, {"A1": -0.1, "A2": -0.05}),
    ]
    lines = []
    ok = True
    for name, sc, params in runs:
        text = preset_expression(name, sc, params)
        t0 = time.time()
        _, _, frac, band, comp_r, comp_o = backend_agreement(text, sc, grid=200)
        dt = time.time() - t0
        good = frac < 0.005 and comp_r == comp_o and dt < 120.0
        ok = ok and good
        lines.append(f"{name}[{'+'.join(f'{k}={v}' for k, v in params.items())}]"
                     f" {frac:.4%}/{comp_r}={comp_o}/{dt:.1f}s")
    report(7, ok, "; ".join(lines))


# ---------------------------------------------------------------------------


def test_criterion_8_parser_normalizer(rng):
    scene = Scene({"A": star_polygon(rng, 9, scale=1.6),
                   "B": star_polygon(rng, 7, 0.3, 0.2, 0.6)})
    kinds = ["gamma1", "gamma2", "d1", "d2"]
    cmps = ["<", "<=", "=", "!=", ">=", ">"]

    def gen(depth):
        if depth == 0 or rng.random() < 0.45:
            k = kinds[rng.integers(len(kinds))]
            c = cmps[rng.integers(len(cmps))]
            lam = round(float(rng.uniform(-1, 4)), 2)
            return f"{k}(B,A) {c} {lam}"
        op = "&" if rng.random() < 0.5 else "|"
        body = f" {op} ".join(gen(depth - 1) for _ in range(int(rng.integers(2, 4))))
        return f"!({body})" if rng.random() < 0.25 else f"({body})"

    bad_rt = bad_sem = 0
    for i in range(1000):
        text = gen(3)
        e = parse(text)
        if parse(print_expr(e)) != e:
            bad_rt += 1
            continue
        if i % 10 == 0:  # pointwise soundness on a tenth of the expressions
            n = normalize(e)
            for _ in range(4):
                p = Point(*rng.uniform(-3, 3, 2))
                a = eval_point(e, scene, p)
                b = eval_point(n, scene, p)
                if a.code != 2 and b.code != 2 and a.code != b.code:
                    bad_sem += 1

    # the three disjunction identities, pointwise
    bad_rules = 0
    for k, lam in (("gamma1", 0.4), ("gamma2", 3.0), ("d1", 0.6)):
        for cmp_pair in ((f"{k}(B,A) <= {lam}", f"{k}(B,A) < {lam} | {k}(B,A) = {lam}"),
                         (f"{k}(B,A) != {lam}", f"{k}(B,A) < {lam} | {k}(B,A) > {lam}"),
                         (f"{k}(B,A) >= {lam}", f"{k}(B,A) > {lam} | {k}(B,A) = {lam}")):
            lhs, rhs = map(parse, cmp_pair)
            for _ in range(25):
                p = Point(*rng.uniform(-3, 3, 2))
                a = eval_point(lhs, scene, p)
                b = eval_point(rhs, scene, p)
                if a.code != 2 and b.code != 2 and a.code != b.code:
                    bad_rules += 1
    ok = bad_rt == 0 and bad_sem == 0 and bad_rules == 0
    report(8, ok, f"1000 round-trips ({bad_rt} bad); semantics preserved "
                  f"({bad_sem} bad); threshold rewrites pointwise ({bad_rules} bad)")
