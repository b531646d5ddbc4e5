import json

import pytest

from cspacemap.cli import main
from cspacemap.errors import SceneError
from cspacemap.geom import MultiPolygon
from cspacemap.region import Flag, FreeFeature, RegionNR, region_from_polygon
from cspacemap.scene import (
    load_map,
    load_scene,
    save_map,
    save_scene,
    scene_from_json,
)

from conftest import data_path


class TestSceneIO:
    def test_minimal_scene(self, tmp_path):
        path = tmp_path / "s.json"
        path.write_text('{"objects":{"A":{"rings":[[[0,0],[1,0],[1,1],[0,1]]]}}}')
        scene = load_scene(str(path))
        assert scene.objects["A"].area == pytest.approx(1.0)

    def test_invalid_ring(self, tmp_path):
        path = tmp_path / "s.json"
        path.write_text('{"objects":{"A":{"rings":[[[0,0],[1,1]]]}}}')
        with pytest.raises(SceneError) as exc:
            load_scene(str(path))
        assert "/objects/A" in str(exc.value)

    def test_schema_error_pointer(self):
        with pytest.raises(SceneError) as exc:
            scene_from_json({"objects": {"A": {"rings": "nope"}}})
        assert "/objects/A/rings" in str(exc.value)

    def test_group_member_missing(self):
        with pytest.raises(SceneError) as exc:
            scene_from_json({"objects": {"A": {"rings": [[[0, 0], [1, 0], [0, 1]]]}},
                             "groups": {"g": ["Z"]}})
        assert "/groups/g" in str(exc.value)

    def test_round_trip(self, tmp_path):
        scene = load_scene(data_path("findspace.json"))
        out = tmp_path / "rt.json"
        save_scene(scene, str(out))
        back = load_scene(str(out))
        assert set(back.objects) == set(scene.objects)
        for name in scene.objects:
            assert back.objects[name].area == pytest.approx(scene.objects[name].area)
        assert back.groups == scene.groups
        assert back.container == scene.container

    def test_hole_rings(self):
        scene = scene_from_json({"objects": {"A": {"rings": [
            [[0, 0], [4, 0], [4, 4], [0, 4]],
            {"hole": True, "points": [[1, 1], [3, 1], [3, 3], [1, 3]]},
        ]}}})
        assert scene.objects["A"].area == pytest.approx(12.0)

    def test_map_round_trip(self, tmp_path):
        region = region_from_polygon(MultiPolygon.box(0, 0, 2, 1), Flag.INCLUDED,
                                     (-5, -5, 5, 5))
        region = RegionNR(region.area, region.pieces,
                          (FreeFeature("POINT", ((3.0, 3.0),)),),
                          (), region.window, ("note",))
        path = tmp_path / "m.json"
        save_map(region, str(path))
        back = load_map(str(path))
        assert back.area.area == pytest.approx(2.0)
        assert back.features[0].points == ((3.0, 3.0),)
        assert back.diagnostics == ("note",)
        assert {p.flag for p in back.pieces} == {Flag.INCLUDED}


class TestCommands:
    SCENE = data_path("findspace.json")

    def test_dist(self, capsys):
        rc = main(["dist", "--scene", self.SCENE, "--kind", "gamma1",
                   "--subject", "B", "--reference", "A1"])
        assert rc == 0
        out = capsys.readouterr().out
        assert "gamma1" in out and "witness" in out

    def test_region_writes_map_and_svg(self, tmp_path, capsys):
        out = tmp_path / "m.json"
        svg = tmp_path / "m.svg"
        rc = main(["region", "--scene", self.SCENE, "--expr", "eta1(B,R) <= -0.5",
                   "--out", str(out), "--svg", str(svg)])
        assert rc == 0
        data = json.loads(out.read_text())
        assert data["version"] == "cspace-map/1"
        assert svg.read_text().startswith("<svg")

    def test_classify(self, capsys):
        rc = main(["classify", "--scene", self.SCENE,
                   "--expr", "gamma1(B,obs) > 0", "--point", "0.2,0.2"])
        assert rc == 0
        assert "TRUE" in capsys.readouterr().out

    def test_sample_pgm(self, tmp_path, capsys):
        out = tmp_path / "m.pgm"
        rc = main(["sample", "--scene", self.SCENE, "--preset", "findspace",
                   "--grid", "60", "--out", str(out)])
        assert rc == 0
        assert out.read_bytes().startswith(b"P5\n60 60\n")

    def test_preset_self_check_passes(self, tmp_path, capsys):
        rc = main(["preset", "--scene", self.SCENE, "--preset", "findspace",
                   "--grid", "100", "--out", str(tmp_path / "m.json")])
        assert rc == 0
        out = capsys.readouterr().out
        assert "components: region=2 oracle=2" in out

    def test_svg_deterministic(self, tmp_path):
        a = tmp_path / "a.svg"
        b = tmp_path / "b.svg"
        for target in (a, b):
            rc = main(["render", "--scene", self.SCENE,
                       "--expr", "eta1(B,R) <= 0 & gamma1(B,A1) > 0.5",
                       "--svg", str(target)])
            assert rc == 0
        assert a.read_bytes() == b.read_bytes()


class TestExitCodes:
    SCENE = data_path("findspace.json")

    def test_parse_error_2(self, tmp_path, capsys):
        rc = main(["region", "--scene", self.SCENE, "--expr", "gamma1(B,A1 <",
                   "--out", str(tmp_path / "x.json")])
        assert rc == 2

    def test_scene_error_3(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text('{"objects":{"A":{"rings":[[[0,0],[1,1]]]}}}')
        rc = main(["region", "--scene", str(bad), "--expr", "d1(B,A) < 1"])
        assert rc == 3

    def test_unknown_object_3(self, capsys):
        rc = main(["region", "--scene", self.SCENE, "--expr", "d1(B,Zed) < 1"])
        assert rc == 3

    def test_undefined_distance_4(self, tmp_path, capsys):
        scene = tmp_path / "s.json"
        scene.write_text(json.dumps({
            "objects": {"A": {"rings": [[[0, 0], [1, 0], [1, 1], [0, 1]]]},
                        "B": {"rings": [[[0, 0], [3, 0], [3, 3], [0, 3]]]}}}))
        rc = main(["dist", "--scene", str(scene), "--kind", "eta1",
                   "--subject", "B", "--reference", "A"])
        assert rc == 4

    def test_mismatch_5(self, capsys):
        # a negative allowance can never be met, so the self-check trips
        rc = main(["preset", "--scene", self.SCENE, "--preset", "findspace",
                   "--grid", "60", "--max-disagree", "-1"])
        assert rc == 5
