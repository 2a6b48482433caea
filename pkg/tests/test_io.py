from fractions import Fraction

import pytest
import yaml
from hypothesis import given, strategies as st

from raddepth.io import (AlgebraFile, ParseError, ValidationError, dump_algebra, load_algebra,
                         load_preset, parse_algebra, preset_names)

GOOD = """
name: square
vertices: [1, 2, 3, 4]
arrows:
  - {name: a, from: 1, to: 2}
  - {name: b, from: 2, to: 4}
  - {name: c, from: 1, to: 3}
  - {name: d, from: 3, to: 4}
relations:
  - terms:
      - {coeff: 1, path: [a, b]}
      - {coeff: "-1/2", path: [c, d]}
qh_order: [4, 3, 2, 1]
"""


def test_parse_good_file():
    af = parse_algebra(GOOD)
    assert af.vertices == ["1", "2", "3", "4"]
    assert af.relations[0][1] == (Fraction(-1, 2), ["c", "d"])
    assert af.order == ["4", "3", "2", "1"]
    assert af.presentation().dim == 9


def test_roundtrip():
    af = parse_algebra(GOOD)
    assert parse_algebra(dump_algebra(af)) == af


def test_load_from_disk(tmp_path):
    p = tmp_path / "alg.yaml"
    p.write_text(GOOD)
    assert load_algebra(str(p)).name == "square"


def test_all_presets_load():
    names = preset_names()
    assert {"A1", "A2", "A3", "N3", "kronecker", "QH4"} <= set(names)
    for n in names:
        load_preset(n).presentation()


def test_unknown_preset():
    with pytest.raises(KeyError):
        load_preset("nope")


@pytest.mark.parametrize("text, error", [
    ("[1, 2]", ParseError),
    ("vertices: [1]\n", ParseError),
    ("vertices: [1]\narrows: []\nextra: 1\n", ParseError),
    ("vertices: [1, 1]\narrows: []\n", ValidationError),
    ("vertices: [1]\narrows: [{name: a, from: 1, to: 2}]\n", ValidationError),
    ("vertices: [1, 2]\narrows: [{name: a, from: 1, to: 2}, {name: a, from: 1, to: 2}]\n",
     ValidationError),
    ("vertices: [v]\narrows: [{name: x, from: v, to: v}]\n"
     "relations: [{terms: [{coeff: 0.5, path: [x, x]}]}]\n", ValidationError),
    ("vertices: [v]\narrows: [{name: x, from: v, to: v}]\n"
     "relations: [{terms: [{coeff: 1, path: [x]}]}]\n", ValidationError),
    ("vertices: [v]\narrows: [{name: x, from: v, to: v}]\n"
     "relations: [{terms: [{coeff: 0, path: [x, x]}]}]\n", ValidationError),
    ("vertices: [1, 2]\narrows: [{name: a, from: 1, to: 2}]\nqh_order: [1]\n", ValidationError),
    ("vertices: [1\n", ParseError),
])
def test_rejections(text, error):
    with pytest.raises(error):
        parse_algebra(text)


def test_parse_error_carries_line():
    with pytest.raises(ParseError) as info:
        parse_algebra("vertices: [1, 2]\narrows: [\n  {name: a\n")
    assert info.value.line is not None


@given(st.fractions(max_denominator=50))
def test_coefficients_roundtrip_exactly(c):
    if c == 0:
        c = Fraction(1)
    af = AlgebraFile("t", ["v"], [("x", "v", "v")], [[(c, ["x", "x"])]])
    back = parse_algebra(dump_algebra(af))
    assert back.relations[0][0][0] == c
