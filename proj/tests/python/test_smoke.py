from fractions import Fraction as F
import xml.etree.ElementTree as ET

import pytest

import chromogeometry as cg

TRIANGLE = [(0, 0), (6, 1), (2, 3)]


def test_quadrances():
    assert cg.quadrance("blue", (0, 0), (6, 1)) == 37
    assert cg.quadrance("red", (0, 0), (6, 1)) == 35
    assert cg.quadrance("green", (0, 0), (6, 1)) == 12
    assert cg.quadrance("red", (0, 0), (1, 1)) == 0


def test_spreads_and_join():
    l1 = cg.join((0, 0), (6, 1))
    l2 = cg.join((0, 0), (2, 3))
    assert l1 == (1, -6, 0)
    assert cg.spread("blue", l1, l2) == F(256, 481)
    assert cg.spread("green", l1, l2) == F(-16, 9)
    total = sum(1 / cg.spread(c, l1, l2) for c in ("blue", "red", "green"))
    assert total == 2


def test_centers():
    assert cg.orthocenter("blue", TRIANGLE) == (F(15, 8), F(15, 4))
    assert cg.circumcenter("red", TRIANGLE) == (F(55, 16), F(25, 8))
    assert cg.nine_point_center("green", TRIANGLE) == (F(13, 4), F(13, 8))
    assert cg.euler_line("green", TRIANGLE) == (1, -2, 0)
    center, k = cg.circumcircle("blue", TRIANGLE)
    assert center == (F(49, 16), F(1, 8)) and k == F(2405, 256)


def test_fraction_and_string_inputs():
    tri = [(F(0), "0"), ("6", 1), (F(4, 2), "3")]
    assert cg.orthocenter("red", tri) == (F(9, 8), F(-9, 4))


def test_prime_field():
    assert cg.quadrance("blue", (0, 0), (6, 1), field="fp:13") == 37 % 13
    o = cg.orthocenter("blue", TRIANGLE, field="fp:13")
    assert o == (15 * pow(8, -1, 13) % 13, 15 * pow(4, -1, 13) % 13)


def test_report_round_trip():
    doc = cg.report(TRIANGLE)
    assert doc["centers"]["G"] == ["8/3", "4/3"]
    assert doc["circles"]["nine_point"]["blue"]["K"] == "2405/1024"
    assert all(v is True for v in doc["law_checks"].values())
    assert cg.reverify(doc) == []
    doc["centers"]["blue"]["O"] = ["0", "0"]
    assert cg.reverify(doc) != []


def test_errors():
    with pytest.raises(cg.DegenerateTriangle):
        cg.report([(0, 0), (1, 1), (2, 2)])
    with pytest.raises(cg.InvalidField):
        cg.report(TRIANGLE, field="fp:4")
    with pytest.raises(cg.ParseError):
        cg.quadrance("blue", ("1/x", 0), (0, 0))
    with pytest.raises(cg.ChromoError):
        cg.spread("red", (1, 1, 0), (1, 0, 0))
    with pytest.raises(TypeError):
        cg.quadrance("blue", (0.5, 0), (0, 0))


def test_svg_is_well_formed():
    doc = cg.svg(TRIANGLE, elements="euler,circumcircles,centers", width=640)
    root = ET.fromstring(doc)
    assert root.tag.endswith("svg") and root.get("width") == "640"
    lines = [e for e in root.iter() if e.tag.endswith("line") and "euler" in (e.get("class") or "")]
    assert len(lines) == 3
    labels = {e.text for e in root.iter() if e.tag.endswith("text")}
    assert {"O_b", "C_r", "N_g", "G"} <= labels


def test_sweep():
    s = cg.sweep(5)
    assert s["total"] == 5 ** 6
    assert s["triangles_checked"] + s["collinear_skipped"] == s["total"]
    assert s["total_failures"] == 0
    a = cg.sweep(7, samples=2000, seed=3, jobs=1)
    b = cg.sweep(7, samples=2000, seed=3, jobs=4)
    assert a == b
