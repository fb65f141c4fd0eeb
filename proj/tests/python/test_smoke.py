import json
from pathlib import Path

import pytest

acmlines = pytest.importorskip("acmlines")

DATA = Path(__file__).resolve().parent.parent / "data"


def load(name):
    return (DATA / name).read_text()


def test_w_is_acm():
    verdict = acmlines.check(load("w_10_lines.json"))
    assert verdict["acm"] is True
    assert verdict["unanimous"] is True
    assert verdict["witness"] is None
    assert acmlines.reisner_cm(load("w_10_lines.json"))


def test_three_lines_witness():
    verdict = acmlines.check(load("not_acm_3_lines.json"))
    assert verdict["acm"] is False
    assert verdict["failing_n"] == 4
    assert len(verdict["witness"]["cycle"]) == 4
    assert not acmlines.reisner_cm(load("not_acm_3_lines.json"))


def test_ferrers_degrees_and_products():
    x = load("ferrers_box_4_3_2.json")
    assert acmlines.is_ferrers(x)
    assert acmlines.generator_degrees(x) == [(0, 3, 2), (4, 0, 2), (4, 3, 0)]
    assert acmlines.scan_degrees(x, (6, 6, 6)) == [(0, 3, 2), (4, 0, 2), (4, 3, 0)]
    assert sorted(acmlines.generator_products(x)) == [
        "A1*A2*A3*A4*B1*B2*B3",
        "A1*A2*A3*A4*C1*C2",
        "B1*B2*B3*C1*C2",
    ]


def test_hilbert_methods_agree():
    x = load("ferrers_box_4_3_2.json")
    a = acmlines.hilbert(x, (4, 4, 4))
    b = acmlines.hilbert(x, (4, 4, 4), method="oracle")
    assert a == b
    assert a["H"][0][0][0] == 1


def test_dict_input():
    x = json.loads(load("w_10_lines.json"))
    assert acmlines.is_acm(json.dumps(x))
    assert acmlines.check(x)["acm"]


def test_grid_and_resolution():
    g = acmlines.grid_from_points(load("points_box_2_3_2.json"))
    assert len(g["U3"]) == 6 and len(g["U2"]) == 4 and len(g["U1"]) == 6
    assert acmlines.grid_resolution(2, 3, 2) == "0 -> R^2(-2,-3,-2) -> R(-2,-3,0) + R(-2,0,-2) + R(0,-3,-2) -> I -> 0"


def test_experiment_is_deterministic():
    a = acmlines.hf_experiment(trials=10, seed=3)
    assert a == acmlines.hf_experiment(trials=10, seed=3)
    assert a["trials"] == 10


def test_malformed_input_raises():
    with pytest.raises(acmlines.AcmLinesError):
        acmlines.check(load("malformed.json"))
