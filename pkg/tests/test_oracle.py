import math

import numpy as np
import pytest

from cspacemap import distances as D
from cspacemap.errors import UndefinedDistanceError
from cspacemap.geom import MultiPolygon, Point
from cspacemap.oracle import flood_components, oracle_distance, oracle_map
from cspacemap.scene import load_scene
from cspacemap.tgs import parse

from conftest import data_path, star_polygon

UNIT = MultiPolygon.box(0, 0, 1, 1)
BIG = MultiPolygon.box(0, 0, 4, 4)
O = Point(0, 0)


class TestDistanceOracles:
    def test_d2_exact(self, rng):
        for _ in range(20):
            A = star_polygon(rng, 9, *rng.uniform(-2, 2, 2))
            B = star_polygon(rng, 7, *rng.uniform(-2, 2, 2))
            assert oracle_distance("d2", A, B, O) == D.d2(A, B)

    def test_d1_exact(self, rng):
        for _ in range(20):
            A = star_polygon(rng, 9, -2.5, 0)
            B = star_polygon(rng, 7, 2.5, rng.uniform(-1, 1))
            assert oracle_distance("d1", A, B, O) == pytest.approx(
                D.d1(A, B), abs=1e-12)

    def test_gamma1_agreement(self, rng):
        density = 128.0
        for _ in range(25):
            A = star_polygon(rng, 8, *rng.uniform(-1, 1, 2), rng.uniform(0.6, 1.5))
            B = star_polygon(rng, 7, *rng.uniform(-1.5, 1.5, 2), rng.uniform(0.4, 1.0))
            fast = D.gamma1(B, A).value
            slow = oracle_distance("gamma1", A, B, O, density)
            assert fast == pytest.approx(slow, abs=max(1e-6, 2.0 / density))

    def test_gamma2_exact(self, rng):
        A = star_polygon(rng, 10)
        B = star_polygon(rng, 8, 1, 1)
        assert oracle_distance("gamma2", A, B, O) == D.gamma2(B, A)

    def test_eta_cases(self):
        # contained: exact boundary-pair distance
        got = oracle_distance("eta1", BIG, UNIT, Point(1, 1))
        assert got == pytest.approx(-1.0, abs=1e-12)
        got = oracle_distance("eta1", BIG, UNIT, O, density=64)
        assert got == pytest.approx(0.0, abs=0.1)  # grid accuracy at touching
        with pytest.raises(UndefinedDistanceError):
            oracle_distance("eta1", UNIT, BIG, O)

    def test_eta2_grid(self):
        got = oracle_distance("eta2", BIG, UNIT, O, density=64)
        assert got == pytest.approx(math.hypot(3, 3), abs=0.1)

    def test_delta_cases(self):
        got = oracle_distance("delta1", UNIT, BIG, Point(-1, -1))
        assert got == pytest.approx(-1.0, abs=1e-12)
        with pytest.raises(UndefinedDistanceError):
            oracle_distance("delta1", MultiPolygon.box(0, 0, 2, 2), UNIT, O)

    def test_dstar(self):
        assert oracle_distance("dstar", BIG, UNIT, Point(1, 1)) == \
            pytest.approx(1.0, abs=1e-12)
        assert oracle_distance("dstar", BIG, UNIT, Point(10, 0)) == 0.0

    def test_mu_vs_bisection(self, rng):
        # convex references keep the sampled supremum vertex-exact
        for _ in range(6):
            from cspacemap.geom import convex_hull

            hullA = convex_hull(star_polygon(rng, 9, scale=2.0))
            A = MultiPolygon(((hullA, ()),))
            B = star_polygon(rng, 7, 0.4, 0.2, 0.8)
            fast = D.mu(B, A).value
            chord = abs(fast) * (1 / math.cos(math.pi / 64) - 1) + 1e-9
            slow = oracle_distance("mu", A, B, O, density=256)
            assert fast == pytest.approx(slow, abs=max(2 * chord, 1e-3))

    def test_haus_symmetric(self, rng):
        A = star_polygon(rng, 8)
        B = star_polygon(rng, 8, 0.5, 0.1)
        ab = oracle_distance("haus", A, B, O, 128)
        ba = oracle_distance("haus", B, A, O, 128)
        assert ab == pytest.approx(ba, abs=2e-2)


class TestOracleMap:
    def test_findspace_components(self):
        scene = load_scene(data_path("findspace.json"))
        from cspacemap.tgs import preset_expression

        text = preset_expression("findspace", scene, {})
        bitmap = oracle_map(parse(text), scene, grid=100)
        assert bitmap.component_count() == 2

    def test_empty_constraint_all_false(self):
        scene = load_scene(data_path("findspace.json"))
        bitmap = oracle_map(parse("gamma1(B,A1) <= 1 & gamma1(B,A1) >= 2"),
                            scene, grid=50)
        assert not np.any(bitmap.codes == 1)

    def test_tautology_mostly_true(self):
        scene = load_scene(data_path("findspace.json"))
        bitmap = oracle_map(parse("gamma1(B,A1) <= 1 | gamma1(B,A1) > 1"),
                            scene, grid=50)
        frac_true = np.mean(bitmap.codes == 1)
        assert frac_true > 0.98  # all but the ambiguous threshold band

    def test_pgm_dump(self, tmp_path):
        scene = load_scene(data_path("findspace.json"))
        bitmap = oracle_map(parse("eta1(B,R) <= 0"), scene, grid=50)
        out = tmp_path / "map.pgm"
        bitmap.to_pgm(str(out))
        data = out.read_bytes()
        assert data.startswith(b"P5\n50 50\n255\n")
        assert len(data) == len(b"P5\n50 50\n255\n") + 2500

    def test_grid_minimum(self):
        scene = load_scene(data_path("findspace.json"))
        with pytest.raises(ValueError):
            oracle_map(parse("eta1(B,R) <= 0"), scene, grid=10)


class TestFloodFill:
    def test_counts(self):
        mask = np.zeros((10, 10), dtype=bool)
        mask[1:3, 1:3] = True
        mask[6:9, 6:9] = True
        mask[0, 9] = True
        assert flood_components(mask) == 3

    def test_connectivity_is_4(self):
        mask = np.zeros((4, 4), dtype=bool)
        mask[0, 0] = True
        mask[1, 1] = True  # diagonal only: separate components
        assert flood_components(mask) == 2
