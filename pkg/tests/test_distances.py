import math

import pytest

from cspacemap import distances as D
from cspacemap.errors import EmptyInputError, UndefinedDistanceError
from cspacemap.geom import MultiPolygon, Point, reflect

from conftest import star_polygon

UNIT = MultiPolygon.box(0, 0, 1, 1)
BIG = MultiPolygon.box(0, 0, 4, 4)


class TestStandard:
    def test_d1_gap(self):
        assert D.d1(UNIT, MultiPolygon.box(3, 0, 4, 1)) == pytest.approx(2.0)

    def test_d2_is_diameter(self):
        assert D.d2(UNIT, UNIT) == pytest.approx(math.sqrt(2))

    def test_d1_zero_on_overlap(self):
        assert D.d1(UNIT, MultiPolygon.box(0.5, 0.5, 2, 2)) == 0.0

    def test_empty_raises(self):
        with pytest.raises(EmptyInputError):
            D.d1(UNIT, MultiPolygon.empty())


class TestGamma:
    def test_disjoint_equals_d1(self):
        far = MultiPolygon.box(3, 0, 4, 1)
        assert D.gamma1(far, UNIT).value == pytest.approx(2.0, abs=1e-12)

    def test_identical_squares(self):
        assert D.gamma1(UNIT, UNIT).value == pytest.approx(-1.0, abs=1e-12)

    def test_outer_touching_zero(self):
        touch = MultiPolygon.box(1, 0, 2, 1)
        assert D.gamma1(touch, UNIT).value == pytest.approx(0.0, abs=1e-12)

    def test_gamma2_point_like(self):
        # a very small square standing in for the origin point
        tiny = MultiPolygon.box(-1e-9, -1e-9, 1e-9, 1e-9)
        assert D.gamma2(tiny, UNIT) == pytest.approx(math.sqrt(2), abs=1e-8)

    def test_gamma2_identical(self):
        assert D.gamma2(UNIT, UNIT) == pytest.approx(math.sqrt(2), abs=1e-12)

    def test_gamma2_common_translation_invariant(self, rng):
        A = star_polygon(rng, 10)
        B = star_polygon(rng, 8, 1.0, 0.5)
        base = D.gamma2(B, A)
        for _ in range(10):
            t = Point(*rng.uniform(-5, 5, 2))
            assert D.gamma2(B.translated(t), A.translated(t)) == \
                pytest.approx(base, abs=1e-9)

    def test_sign_trichotomy_matches_predicates(self, rng):
        def draw(kind_roll, cx, cy, s):
            if kind_roll < 0.5:
                return MultiPolygon.box(cx - s, cy - s, cx + s, cy + s)
            return MultiPolygon.from_coords(
                [(cx - s, cy - s), (cx + s, cy - s), (cx, cy + s)])

        for _ in range(1000):
            A = draw(rng.random(), *rng.uniform(-1.5, 1.5, 2), rng.uniform(0.3, 1.0))
            B = draw(rng.random(), *rng.uniform(-1.5, 1.5, 2), rng.uniform(0.3, 1.0))
            g = D.gamma1(B, A).value
            if abs(g) <= 1e-9:
                continue  # touching band
            inter = A.shapely.intersection(B.shapely)
            assert (g < 0) == (inter.area > 1e-15)

    def test_gamma2_at_least_gamma1(self, rng):
        for _ in range(20):
            A = star_polygon(rng, 9)
            B = star_polygon(rng, 6, 0.5, 0.5)
            assert D.gamma2(B, A) >= D.gamma1(B, A).value


class TestEtaDelta:
    def test_corner_touch_zero(self):
        e1, _ = D.eta(UNIT, BIG)
        assert e1.value == pytest.approx(0.0, abs=1e-12)

    def test_shifted_inside(self):
        e1, _ = D.eta(UNIT.translated(Point(1, 1)), BIG)
        assert e1.value == pytest.approx(-1.0, abs=1e-12)

    def test_undefined(self):
        with pytest.raises(UndefinedDistanceError):
            D.eta(MultiPolygon.box(0, 0, 2, 2), UNIT)

    def test_delta_corner(self):
        d1v, _ = D.delta(BIG, UNIT)
        assert d1v.value == pytest.approx(0.0, abs=1e-12)

    def test_delta_shifted(self):
        d1v, _ = D.delta(BIG.translated(Point(-1, -1)), UNIT)
        assert d1v.value == pytest.approx(-1.0, abs=1e-12)

    def test_delta_undefined(self):
        with pytest.raises(UndefinedDistanceError):
            D.delta(UNIT, MultiPolygon.box(0, 0, 2, 2))

    def test_delta_is_eta_of_reflections(self, rng):
        for _ in range(8):
            B = star_polygon(rng, 10, scale=3.0)
            A = star_polygon(rng, 7, 0.2, -0.1, 0.5)
            try:
                d1v, d2v = D.delta(B, A)
            except UndefinedDistanceError:
                continue
            e1v, e2v = D.eta(reflect(A), reflect(B))
            assert d1v.value == pytest.approx(e1v.value, abs=1e-9)
            assert d2v == pytest.approx(e2v, abs=1e-9)


class TestDstarPenetration:
    def test_dstar_margin(self):
        assert D.dstar(BIG, MultiPolygon.box(1, 1, 2, 2)) == pytest.approx(1.0, abs=1e-12)

    def test_dstar_not_contained(self):
        assert D.dstar(BIG, MultiPolygon.box(3.5, 3.5, 4.5, 4.5)) == 0.0

    def test_penetration_disjoint_zero(self):
        assert D.penetration_depth(UNIT, MultiPolygon.box(5, 5, 6, 6)) == 0.0

    def test_penetration_identical(self):
        assert D.penetration_depth(UNIT, UNIT) == pytest.approx(1.0, abs=1e-12)


class TestMu:
    def test_protruding_rectangle(self):
        B = MultiPolygon.box(0, 0, 2, 1)
        assert D.mu(B, UNIT).value == pytest.approx(1.0, abs=2e-3)

    def test_contained_equals_eta1(self):
        B = MultiPolygon.box(1, 1, 2, 2)
        m = D.mu(B, BIG).value
        e1, _ = D.eta(B, BIG)
        assert m == pytest.approx(e1.value, abs=2e-3)
        assert m == pytest.approx(-1.0, abs=2e-3)

    def test_hausdorff_self_zero(self):
        assert D.hausdorff(UNIT, UNIT) == pytest.approx(0.0, abs=1e-3)

    def test_hole_swallowing_detected(self):
        # the supremum sits at the dot's center, strictly inside it: interior
        # sampling must see it, boundary-only sampling would report 0.9
        ann = MultiPolygon.from_polygons(
            [([(-2, -2), (2, -2), (2, 2), (-2, 2)],
              [[(-1, -1), (1, -1), (1, 1), (-1, 1)]])])
        dot = MultiPolygon.box(-0.1, -0.1, 0.1, 0.1)
        m = D.mu(dot, ann).value
        assert m == pytest.approx(1.0, abs=5e-3)

    def test_mu_at_most_gamma2(self, rng):
        for _ in range(6):
            A = star_polygon(rng, 8)
            B = star_polygon(rng, 6, 0.5, 0.3)
            assert D.mu(B, A).value <= D.gamma2(B, A) + 1e-6


class TestMotionInvariance:
    KINDS = ["d1", "d2", "gamma1", "gamma2", "eta1", "eta2", "mu"]

    def _values(self, B, A, seg=64):
        out = {"d1": D.d1(A, B), "d2": D.d2(A, B),
               "gamma1": D.gamma1(B, A).value, "gamma2": D.gamma2(B, A)}
        e1, e2 = D.eta(B, A)
        out["eta1"], out["eta2"] = e1.value, e2
        out["mu"] = D.mu(B, A, seg).value
        return out

    def test_common_motion(self, rng):
        A = star_polygon(rng, 10, scale=3.0)
        B = star_polygon(rng, 7, 0.3, 0.1, 0.6)
        base = self._values(B, A)
        for _ in range(10):
            th = rng.uniform(0, 2 * math.pi)
            t = Point(*rng.uniform(-4, 4, 2))
            gB = B.rotated(th).translated(t)
            gA = A.rotated(th).translated(t)
            moved = self._values(gB, gA)
            for k in self.KINDS:
                assert moved[k] == pytest.approx(base[k], abs=1e-6), k

    def test_relative_translation_transport(self, rng):
        A = star_polygon(rng, 9, scale=2.0)
        B = star_polygon(rng, 7, 0.2, 0.2, 0.7)
        for _ in range(10):
            p = Point(*rng.uniform(-2, 2, 2))
            lhs = D.gamma1(B.translated(p), A).value
            rhs = D.gamma1(B, A.translated(-p)).value
            assert lhs == pytest.approx(rhs, abs=1e-9)

    def test_interpolation_identity(self, rng):
        A = star_polygon(rng, 8, scale=2.0)
        B = star_polygon(rng, 6, 0.3, -0.2, 0.6)
        p = Point(1.3, -0.7)
        vals = []
        for alpha in (0.0, 0.25, 0.5, 1.0):
            vals.append(D.gamma1(
                B.translated(p.scaled(alpha)),
                A.translated(p.scaled(-(1 - alpha)))).value)
        assert max(vals) - min(vals) < 1e-9


class TestMuDualRoutes:
    def test_bisection_close_to_sampling_boxes(self):
        # axis-aligned pairs: the sampled supremum is vertex-exact, so the
        # two routes agree within the bisection-plus-chord budget
        pairs = [
            (MultiPolygon.box(0, 0, 2, 1), UNIT),
            (MultiPolygon.box(1, 1, 2, 2), BIG),
            (MultiPolygon.box(-1, 0, 0.5, 2), MultiPolygon.box(0, 0, 3, 3)),
        ]
        for B, A in pairs:
            from cspacemap.distances import _canonical_pose, _mu_bisect, _mu_sampled

            B2, A2, _, _ = _canonical_pose(B, A)
            sampled, _, _ = _mu_sampled(B2, A2, 512.0, 40)
            chord = abs(sampled) * (1 / math.cos(math.pi / 64) - 1) + 1e-9
            bis = _mu_bisect(B2, A2, 64, tol=max(1e-6, chord / 4))
            assert abs(bis - sampled) <= max(2 * chord, 1e-4)
