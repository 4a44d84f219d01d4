import json
import pathlib
import subprocess
import sys

import jsonschema
import pytest

from transversals.core import Segment3, vec
from transversals.errors import SceneFormatError
from transversals.generators import generate
from transversals.scalars import rat
from transversals.scene_io import (
    dump_json,
    parse_scene,
    parse_scene_text,
    result_to_doc,
    scene_to_doc,
)
from transversals.solver import solve

ROOT = pathlib.Path(__file__).resolve().parents[1]
SCENE_SCHEMA = json.loads((ROOT / "schemas" / "scene.schema.json").read_text())
RESULT_SCHEMA = json.loads((ROOT / "schemas" / "result.schema.json").read_text())


class TestSceneParsing:
    def test_round_trip_canonical(self):
        segs = [
            Segment3(vec(0, 0, 0), (rat(5, 4), rat(-3), rat(2)), False, True),
            Segment3(vec(1, 1, 1), vec(1, 1, 1)),
        ]
        doc = scene_to_doc(segs)
        jsonschema.validate(doc, SCENE_SCHEMA)
        back = parse_scene(doc)
        assert back == segs
        # byte-identical after one round of canonicalization
        assert dump_json(scene_to_doc(back)) == dump_json(doc)

    def test_decimal_and_fraction_inputs(self):
        doc = {"segments": [{"a": ["1.25", "0", "0"], "b": ["5/4", "1", "0"]}]}
        segs = parse_scene(doc)
        assert segs[0].a[0] == rat(5, 4) == segs[0].b[0]

    def test_unknown_fields_rejected(self):
        with pytest.raises(SceneFormatError):
            parse_scene({"segments": [], "extra": 1})
        with pytest.raises(SceneFormatError):
            parse_scene({"segments": [{"a": ["0"] * 3, "b": ["1", "0", "0"],
                                       "color": "red"}]})

    def test_float_coordinates_rejected(self):
        with pytest.raises(SceneFormatError):
            parse_scene({"segments": [{"a": [0.1, "0", "0"], "b": ["1", "0", "0"]}]})

    def test_empty_and_malformed(self):
        with pytest.raises(SceneFormatError):
            parse_scene({"segments": []})
        with pytest.raises(SceneFormatError):
            parse_scene_text("{not json")
        with pytest.raises(SceneFormatError):
            parse_scene({"segments": [{"a": ["0", "0"], "b": ["1", "0", "0"]}]})
        with pytest.raises(SceneFormatError):
            parse_scene(
                {"segments": [{"a": ["0", "0", "0"], "b": ["0", "0", "0"],
                               "closed_a": False}]}
            )


class TestResultSerialization:
    @pytest.mark.parametrize(
        "name,n",
        [("triangle-stab", None), ("h1-symmetric", 4), ("hp-ruling", 3),
         ("coplanar-chain", 5), ("two-plane", 4), ("concurrent", 3)],
    )
    def test_schema_valid(self, name, n):
        res = solve(generate(name, n))
        doc = result_to_doc(res)
        jsonschema.validate(doc, RESULT_SCHEMA)

    def test_algebraic_representative_schema(self):
        # irrational pinning quadratic: t^2 + t - 1 over the witness line
        from transversals.core import Segment3

        def ruling_seg(d, lo, hi):
            return Segment3(vec(lo, d, d * lo), vec(hi, d, d * hi))

        scene = [ruling_seg(0, -9, 9), ruling_seg(1, -9, 9), ruling_seg(2, -9, 9),
                 Segment3(vec(0, 0, 1), vec(3, 3, -2))]
        res = solve(scene)
        assert res.count == 1
        doc = result_to_doc(res)
        jsonschema.validate(doc, RESULT_SCHEMA)
        rep = doc["components"][0]["representative"]
        assert set(rep) == {"quadratic", "root", "isolating_interval", "witness_line"}
        lo, hi = rep["isolating_interval"]
        from transversals.scalars import parse_scalar

        width = parse_scalar(hi) - parse_scalar(lo)
        assert width <= rat(1, 2**32)

    def test_small_case_chartless_component(self):
        res = solve([Segment3(vec(0, 0, 0), vec(1, 2, 3))])
        doc = result_to_doc(res)
        jsonschema.validate(doc, RESULT_SCHEMA)
        assert doc["components"][0]["chart"] is None
        assert doc["components"][0]["arc"] is None


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "transversals.cli", *args],
        capture_output=True, text=True, cwd=str(ROOT),
    )


class TestCli:
    def test_gen_solve_classify_oracle(self, tmp_path):
        scene = tmp_path / "tri.json"
        out = run_cli("gen", "triangle-stab", "--out", str(scene))
        assert out.returncode == 0
        jsonschema.validate(json.loads(scene.read_text()), SCENE_SCHEMA)

        result_file = tmp_path / "res.json"
        out = run_cli("solve", str(scene), "--json", str(result_file))
        assert out.returncode == 0
        assert "count:          3" in out.stdout
        doc = json.loads(result_file.read_text())
        jsonschema.validate(doc, RESULT_SCHEMA)
        assert doc["count"] == 3

        out = run_cli("classify", str(scene))
        assert out.returncode == 0
        assert out.stdout.strip() == "plane_plus_pencil"

        out = run_cli("oracle", str(scene), "--resolution", "64")
        assert out.returncode == 0
        assert out.stdout.strip() == "3"

    def test_gen_two_plane_counts(self, tmp_path):
        scene = tmp_path / "tp.json"
        assert run_cli("gen", "two-plane", "--n", "4", "--out", str(scene)).returncode == 0
        out = run_cli("solve", str(scene))
        assert "components:     3" in out.stdout

    def test_parse_error_exit_code(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"segments": [{"a": [0.25, "0", "0"], "b": ["1","0","0"]}]}')
        out = run_cli("solve", str(bad))
        assert out.returncode == 2
        err = json.loads(out.stderr)
        assert err["error"]["kind"] == "parse"

    def test_precondition_exit_code(self, tmp_path):
        out = run_cli("gen", "coplanar-chain", "--n", "99", "--out",
                      str(tmp_path / "x.json"))
        assert out.returncode == 3
        err = json.loads(out.stderr)
        assert err["error"]["kind"] == "UnsupportedN"

    def test_dualsvg(self, tmp_path):
        scene = tmp_path / "chain.json"
        run_cli("gen", "coplanar-chain", "--n", "4", "--out", str(scene))
        svg = tmp_path / "dual.svg"
        out = run_cli("dualsvg", str(scene), "--out", str(svg))
        assert out.returncode == 0
        text = svg.read_text()
        assert text.startswith("<svg") and "</svg>" in text
        assert text.count("<line") == 8  # two dual lines per segment
        assert "<polygon" in text  # shaded feasible regions

    def test_dualsvg_rejects_noncoplanar(self, tmp_path):
        scene = tmp_path / "tp.json"
        run_cli("gen", "two-plane", "--n", "4", "--out", str(scene))
        out = run_cli("dualsvg", str(scene), "--out", str(tmp_path / "no.svg"))
        assert out.returncode == 3
