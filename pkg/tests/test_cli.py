import json
import math
import xml.etree.ElementTree as ET

import pytest

from reciprange.cli import main


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr().out
    return code, out


def test_classify_noncon4(capsys):
    code, out = run(capsys, "classify", "--xi", "1,0,1")
    assert code == 0
    rep = json.loads(out)
    assert rep["verdict"] == "DISPLACED_PAIR"
    assert rep["criterion"] == "noncon4"
    assert rep["ellipses"][0]["p"] == 0.5


def test_classify_degenerate(capsys):
    code, out = run(capsys, "classify", "--xi", "0,0,0,0,0")
    assert code == 0
    assert json.loads(out)["verdict"] == "DEGENERATE_SPECTRUM"


def test_classify_de1_caption_values(capsys):
    code, out = run(capsys, "classify", "--xi", "0.801938,1,0,1,0.801938")
    assert code == 0
    rep = json.loads(out)
    assert rep["criterion"] == "de1"
    assert rep["table_row"] == "vi"


def test_classify_unsupported_dimension(capsys):
    code, _ = run(capsys, "classify", "--xi", "1,1")
    assert code == 3


def test_input_errors(capsys, tmp_path):
    code, _ = run(capsys, "classify", "--xi", "1,zz,1")
    assert code == 2
    code, _ = run(capsys, "classify")
    assert code == 2
    code, _ = run(capsys, "classify", "--xi", "1,0,1", "--matrix", "x.json")
    assert code == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _ = run(capsys, "classify", "--matrix", str(bad))
    assert code == 2
    code, _ = run(capsys, "classify", "--xi", "1,0,1", "--n", "5")
    assert code == 2
    code, _ = run(capsys, "range", "--xi", "1,0,1", "--k", "2", "--grid", "4")
    assert code == 2


def test_matrix_file_input(capsys, tmp_path):
    f = tmp_path / "m.json"
    f.write_text(json.dumps({"xi": [1.0, 0.0, 1.0]}))
    code, out = run(capsys, "classify", "--matrix", str(f))
    assert code == 0
    assert json.loads(out)["criterion"] == "noncon4"
    f2 = tmp_path / "m2.json"
    f2.write_text(json.dumps({"n": 3, "superdiag": [[2, 0], [0.5, 0]]}))
    code, out = run(capsys, "curve", "--matrix", str(f2), "--grid", "64")
    assert code == 0


def test_curve_outputs(capsys, tmp_path):
    svg = tmp_path / "c.svg"
    out_json = tmp_path / "c.json"
    code, _ = run(capsys, "curve", "--xi", "0.5,0,0.5,0", "--grid", "256",
                  "--svg", str(svg), "--out", str(out_json))
    assert code == 0
    samples = json.loads(out_json.read_text())
    assert len(samples) == 256 * 5
    assert set(samples[0]) == {"theta", "branch", "re", "im"}
    root = ET.parse(svg).getroot()
    polylines = [e for e in root.iter() if e.tag.endswith("polygon") or e.tag.endswith("polyline")]
    assert len(polylines) == 2  # one per drop component


def test_curve_svg_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    for path in (a, b):
        code, _ = run(capsys, "curve", "--xi", "1,0,1", "--grid", "128", "--svg", str(path))
        assert code == 0
    assert a.read_bytes() == b.read_bytes()


def test_range_lens(capsys, tmp_path):
    svg = tmp_path / "r.svg"
    code, out = run(capsys, "range", "--xi", "1,0,1", "--k", "2", "--grid", "256",
                    "--svg", str(svg))
    assert code == 0
    region = json.loads(out)
    assert region["kind"] == "POLYGON"
    ET.parse(svg)  # well-formed XML


def test_range_empty_and_point(capsys):
    code, out = run(capsys, "range", "--xi", "1,1,1", "--k", "3", "--grid", "128")
    assert code == 0
    assert json.loads(out)["kind"] == "EMPTY"
    xi5 = f"{1 + math.sqrt(3)/2},0,1,{math.sqrt(3)/2}"
    code, out = run(capsys, "range", "--xi", xi5, "--k", "3", "--grid", "128")
    assert code == 0
    region = json.loads(out)
    assert region["kind"] == "POINT"
    assert abs(region["points"][0][0]) < 1e-9


def test_range_requires_k(capsys):
    code, _ = run(capsys, "range", "--xi", "1,0,1", "--grid", "128")
    assert code == 2


def test_json_byte_determinism(capsys):
    _, out1 = run(capsys, "classify", "--xi", "1,0,1")
    _, out2 = run(capsys, "classify", "--xi", "1,0,1")
    assert out1 == out2


def test_verify_battery(capsys, tmp_path):
    out = tmp_path / "verify.json"
    code, _ = run(capsys, "verify", "--grid", "256", "--out", str(out))
    assert code == 0
    report = json.loads(out.read_text())
    assert report["failures"] == 0
    assert report["audit"]["confirmed"] is True
    assert report["audit"]["printed_coefficient"] == -41
    assert report["audit"]["reconstructed_coefficient"] == -41.0
    names = {c["name"] for c in report["checks"]}
    assert "concentric_criterion_audit" in names
    assert "closed_form_vs_determinant" in names
