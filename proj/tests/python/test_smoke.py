import json
import pathlib

import pytest

import polycert

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"
MAP = (DATA / "map.onijn").read_text()


def test_verify_map():
    report = polycert.verify(MAP, name="map.onijn")
    assert report.certified
    assert report.verdict == "CERTIFIED"
    assert [r["verdict"] for r in report.data["rules"]] == ["PROVEN", "PROVEN"]
    assert report.data["version"] == polycert.__version__


def test_verify_file_matches_golden_report():
    report = polycert.verify_file(DATA / "map.onijn")
    golden = (DATA / "map.report.json").read_text()
    expected = json.loads(golden)
    report.data["timing_ms"] = 0
    report.data["input"] = expected["input"]
    assert report.data == expected


def test_weakened_map_is_rejected_with_counterexample():
    weak = MAP.replace("3*y0 + 3*y0 * G1(y0)", "3*y0")
    report = polycert.verify(weak)
    assert report.exit_code == 1
    assert report.data["rules"][1]["counterexample"]


def test_malformed_input():
    report = polycert.verify("YES\nSignature: [")
    assert report.exit_code == 2
    assert report.data["error"].startswith("2:")


def test_synthesize_and_render():
    rules = (DATA / "map_rules.onijn").read_text()
    result = polycert.synthesize(rules, timeout_ms=60000)
    assert result.trace is not None and not result.timed_out
    assert polycert.verify(result.trace).certified
    assert polycert.render(result.trace) == result.trace
    assert polycert.render(MAP) == (DATA / "map.rendered").read_text()


def test_synthesize_failures():
    loop = "YES\nSignature: [ c : o ]\nRules: [ X => X ]\n"
    assert polycert.synthesize(loop).trace is None
    assert polycert.synthesize((DATA / "map_rules.onijn").read_text(), timeout_ms=0).timed_out
    with pytest.raises(polycert.PolycertError):
        polycert.synthesize("YES\n")
