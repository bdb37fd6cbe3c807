"""CLI contract: CSV ingestion, JSON schema, SVG structure, exit codes."""
import json
import xml.etree.ElementTree as ET
from importlib import resources

import numpy as np
import pytest

from datacomplexity.cli import main

SCHEMA_KEYS = [
    "n_samples",
    "n_features",
    "n_classes",
    "classes",
    "prior_probability",
    "score",
    "complexities",
]


def wdbc_csv_path() -> str:
    return str(resources.files("datacomplexity").joinpath("data/wdbc.csv"))


def write_csv(path, rows, header):
    lines = [",".join(header)] + [",".join(str(v) for v in r) for r in rows]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return str(path)


@pytest.fixture
def toy_csv(tmp_path):
    rng = np.random.default_rng(0)
    rows = [
        list(np.round(rng.normal(size=10), 6)) + [k % 2] for k in range(100)
    ]
    header = [f"x{k}" for k in range(10)] + ["label"]
    return write_csv(tmp_path / "toy.csv", rows, header)


class TestListMeasures:
    def test_output(self, capsys):
        assert main(["list-measures"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 22
        assert lines[0] == "f1"
        assert lines[-1] == "c2"

    def test_stable(self, capsys):
        main(["list-measures"])
        first = capsys.readouterr().out
        main(["list-measures"])
        assert capsys.readouterr().out == first


class TestAnalyze:
    def test_schema_keys_exact(self, capsys):
        code = main(["analyze", wdbc_csv_path(), "--seed", "7", "--json", "-"])
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert list(doc) == SCHEMA_KEYS
        assert doc["n_samples"] == 569
        assert doc["n_features"] == 30
        assert doc["classes"] == [0, 1]
        assert doc["prior_probability"] == [0.372583, 0.627417]
        assert list(doc["complexities"]) == [
            "f1", "f1v", "f2", "f3", "f4", "l1", "l2", "l3", "n1", "n2",
            "n3", "n4", "t1", "lsc", "density", "clsCoef", "hubs", "t2",
            "t3", "t4", "c1", "c2",
        ]

    def test_score_round_trip(self, capsys):
        main(["analyze", wdbc_csv_path(), "--json", "-"])
        doc = json.loads(capsys.readouterr().out)
        values = list(doc["complexities"].values())
        assert abs(sum(values) / len(values) - doc["score"]) <= 1e-9

    def test_single_measure_selection(self, toy_csv, capsys):
        code = main(
            ["analyze", toy_csv, "--label-col", "label", "--measures", "t2", "--json", "-"]
        )
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["complexities"] == {"t2": 0.1}

    def test_byte_identical_reruns(self, toy_csv, capsys):
        main(["analyze", toy_csv, "--seed", "5", "--json", "-"])
        first = capsys.readouterr().out
        main(["analyze", toy_csv, "--seed", "5", "--json", "-"])
        assert capsys.readouterr().out == first

    def test_json_file_output(self, toy_csv, tmp_path, capsys):
        out = tmp_path / "report.json"
        code = main(["analyze", toy_csv, "--quiet", "--json", str(out)])
        assert code == 0
        assert capsys.readouterr().out == ""
        doc = json.loads(out.read_text())
        assert list(doc) == SCHEMA_KEYS

    def test_weights_do_not_touch_json_score(self, toy_csv, capsys):
        main(["analyze", toy_csv, "--measures", "t2,c1", "--json", "-"])
        plain = json.loads(capsys.readouterr().out)
        main(
            ["analyze", toy_csv, "--measures", "t2,c1", "--weights", "3,1", "--json", "-"]
        )
        captured = capsys.readouterr()
        weighted = json.loads(captured.out)
        assert weighted["score"] == plain["score"]
        assert "weighted score" in captured.err


class TestValidationErrors:
    def test_three_class_file(self, tmp_path, capsys):
        path = write_csv(
            tmp_path / "three.csv",
            [[1.0, 0], [2.0, 1], [3.0, 2], [4.0, 0]],
            ["x", "label"],
        )
        assert main(["analyze", path]) == 2
        assert "exactly 2 classes" in capsys.readouterr().err

    def test_nan_cell_names_row_and_column(self, tmp_path, capsys):
        path = write_csv(
            tmp_path / "nan.csv",
            [[1.0, 0], [float("nan"), 1], [3.0, 0], [4.0, 1]],
            ["x", "label"],
        )
        assert main(["analyze", path]) == 2
        err = capsys.readouterr().err
        assert "row 2" in err and "'x'" in err

    def test_unparsable_cell(self, tmp_path, capsys):
        path = write_csv(
            tmp_path / "bad.csv", [[1.0, 0], ["abc", 1], [2.0, 1]], ["x", "label"]
        )
        assert main(["analyze", path]) == 2
        assert "cannot parse" in capsys.readouterr().err

    def test_ragged_row(self, tmp_path, capsys):
        path = tmp_path / "ragged.csv"
        path.write_text("x,y,label\n1,2,0\n1,1\n3,4,1\n", encoding="utf-8")
        assert main(["analyze", str(path)]) == 2
        assert "row 2" in capsys.readouterr().err

    def test_missing_file(self, capsys):
        assert main(["analyze", "/nonexistent/data.csv"]) == 2
        assert "error" in capsys.readouterr().err

    def test_unknown_measure(self, toy_csv, capsys):
        assert main(["analyze", toy_csv, "--measures", "zz"]) == 2
        assert "zz" in capsys.readouterr().err

    def test_weights_length_mismatch(self, toy_csv, capsys):
        assert main(["analyze", toy_csv, "--measures", "f1,f2", "--weights", "1"]) == 2

    def test_missing_label_column(self, toy_csv, capsys):
        assert main(["analyze", toy_csv, "--label-col", "nope"]) == 2
        assert "nope" in capsys.readouterr().err


class TestMeasureErrors:
    def test_exit_three_names_measure(self, tmp_path, capsys):
        # one singleton class: n2 needs two instances per class
        path = write_csv(
            tmp_path / "tiny.csv",
            [[0.0, 0], [1.0, 1], [2.0, 1], [3.0, 1]],
            ["x", "label"],
        )
        assert main(["analyze", path, "--measures", "n2"]) == 3
        assert "'n2'" in capsys.readouterr().err


class TestSvgOutput:
    def test_structure(self, tmp_path, capsys):
        svg_path = tmp_path / "chart.svg"
        code = main(
            ["analyze", wdbc_csv_path(), "--quiet", "--json", str(tmp_path / "r.json"),
             "--svg", str(svg_path)]
        )
        assert code == 0
        root = ET.parse(svg_path).getroot()
        ns = {"svg": "http://www.w3.org/2000/svg"}
        paths = root.findall(".//svg:path", ns)
        assert len(paths) == 22
        fills = {p.get("fill") for p in paths}
        assert fills == {"red", "orange", "yellow", "green", "teal", "blue"}
        texts = [t.text for t in root.findall(".//svg:text", ns)]
        report = json.loads((tmp_path / "r.json").read_text())
        assert f"{report['score']:.3f}" in texts

    def test_clamped_wedge_reaches_full_radius(self, tmp_path):
        rng = np.random.default_rng(3)
        rows = [list(rng.normal(size=50)) + [k % 2] for k in range(10)]
        header = [f"x{k}" for k in range(50)] + ["label"]
        csv_path = write_csv(tmp_path / "wide.csv", rows, header)
        svg_path = tmp_path / "wide.svg"
        main(["analyze", csv_path, "--quiet", "--measures", "t2",
              "--json", str(tmp_path / "w.json"), "--svg", str(svg_path)])
        root = ET.parse(svg_path).getroot()
        ns = {"svg": "http://www.w3.org/2000/svg"}
        wedge = root.findall(".//svg:path", ns)[0]
        # t2 = 5 clamps to the full 200-unit radius in the arc parameters
        assert "A 200.00 200.00" in wedge.get("d")

    def test_byte_identical_svg(self, toy_csv, tmp_path):
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        for target in (a, b):
            main(["analyze", toy_csv, "--quiet", "--seed", "2",
                  "--json", str(tmp_path / "x.json"), "--svg", str(target)])
        assert a.read_bytes() == b.read_bytes()
