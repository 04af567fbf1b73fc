"""Exact blue, red and green triangle geometry.

Points are pairs of exact values: ints, ``fractions.Fraction`` or strings
such as ``"49/16"``. Over the rationals (``field="Q"``) results come back as
``Fraction``; over a prime field (``field="fp:13"``) as ``int`` residues.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence, Union

from . import _chromo
from ._chromo import (
    ChromoError,
    CharacteristicThree,
    CoincidentPoints,
    DegenerateTriangle,
    DivisionByZero,
    EulerDegenerate,
    InvalidField,
    MixedFields,
    NullLine,
    OmegaDegenerate,
    ParallelLines,
    ParseError,
    UndefinedSpread,
)

__all__ = [
    "quadrance", "spread", "join", "orthocenter", "circumcenter", "nine_point_center", "euler_line",
    "circumcircle", "report", "reverify", "svg", "sweep",
    "ChromoError", "CharacteristicThree", "CoincidentPoints", "DegenerateTriangle", "DivisionByZero",
    "EulerDegenerate", "InvalidField", "MixedFields", "NullLine", "OmegaDegenerate", "ParallelLines",
    "ParseError", "UndefinedSpread",
]

Value = Union[int, Fraction, str]
PointLike = Sequence[Value]


def _text(v: Value) -> str:
    if isinstance(v, bool):
        raise TypeError("booleans are not field elements")
    if isinstance(v, (int, Fraction)):
        return str(v)
    if isinstance(v, str):
        return v
    raise TypeError(f"expected int, Fraction or str, got {type(v).__name__}")


def _point(p: PointLike) -> tuple[str, str]:
    x, y = p
    return _text(x), _text(y)


def _points(points: Iterable[PointLike]) -> list[tuple[str, str]]:
    return [_point(p) for p in points]


def _value(text: str, field: str):
    return Fraction(text) if field in ("Q", "q", "rational") else int(text)


def quadrance(colour: str, p1: PointLike, p2: PointLike, field: str = "Q"):
    return _value(_chromo.quadrance(colour, _point(p1), _point(p2), field), field)


def spread(colour: str, l1: Sequence[Value], l2: Sequence[Value], field: str = "Q"):
    """Spread between lines given as coefficient triples (a, b, c) of ax + by + c = 0."""
    return _value(_chromo.spread(colour, tuple(map(_text, l1)), tuple(map(_text, l2)), field), field)


def join(p1: PointLike, p2: PointLike, field: str = "Q"):
    return tuple(_value(t, field) for t in _chromo.join(_point(p1), _point(p2), field))


def _center(fn, colour, points, field):
    return tuple(_value(t, field) for t in fn(colour, _points(points), field))


def orthocenter(colour: str, points: Iterable[PointLike], field: str = "Q"):
    return _center(_chromo.orthocenter, colour, points, field)


def circumcenter(colour: str, points: Iterable[PointLike], field: str = "Q"):
    return _center(_chromo.circumcenter, colour, points, field)


def nine_point_center(colour: str, points: Iterable[PointLike], field: str = "Q"):
    return _center(_chromo.nine_point_center, colour, points, field)


def euler_line(colour: str, points: Iterable[PointLike], field: str = "Q"):
    """Canonical coefficients (a, b, c) of the Euler line."""
    return _center(_chromo.euler_line, colour, points, field)


def circumcircle(colour: str, points: Iterable[PointLike], field: str = "Q"):
    """Returns (center, K) with quadrance(colour, center, X) = K on the circle."""
    center, k = _chromo.circumcircle(colour, _points(points), field)
    return tuple(_value(t, field) for t in center), _value(k, field)


def report(points: Iterable[PointLike], field: str = "Q") -> dict:
    """The full report document, identical to ``chromo report`` JSON output."""
    return json.loads(_chromo.report_json(_points(points), field))


def reverify(document: dict) -> list[str]:
    """Recomputes a report from its triangle; returns the list of mismatches."""
    return list(_chromo.reverify_json(json.dumps(document)))


def svg(points: Iterable[PointLike], elements: str = "all", width: int = 800) -> str:
    return _chromo.svg(_points(points), elements, width)


def sweep(prime: int, samples: int = 0, seed: int = 1, groups: Sequence[str] = (), jobs: int = 1) -> dict:
    """Checks every theorem over F_p: exhaustively when samples == 0, else on random triangles."""
    return json.loads(_chromo.sweep_json(prime, samples, seed, list(groups), jobs))
