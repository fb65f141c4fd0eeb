"""Varieties of lines in P1 x P1 x P1: ACM test, Hilbert functions, oracles."""

import json

from . import _core
from ._core import AcmLinesError, grid_resolution, is_acm, is_ferrers, reisner_cm, render

__all__ = [
    "AcmLinesError",
    "check",
    "dumps",
    "generator_degrees",
    "generator_products",
    "grid_from_points",
    "grid_resolution",
    "hf_experiment",
    "hilbert",
    "is_acm",
    "is_ferrers",
    "reisner_cm",
    "render",
    "scan_degrees",
]


def dumps(x):
    """Accepts a JSON string or a dict in the variety format."""
    return x if isinstance(x, str) else json.dumps(x)


def check(x, strict=False):
    return json.loads(_core.check(dumps(x), strict))


def generator_degrees(x):
    return [tuple(d) for d in json.loads(_core.generator_degrees(dumps(x)))]


def generator_products(x):
    return _core.generator_products(dumps(x))


def scan_degrees(x, box=(6, 6, 6)):
    return [tuple(d) for d in json.loads(_core.scan_degrees(dumps(x), list(box)))]


def hilbert(x, box=(6, 6, 6), method="corollary"):
    return json.loads(_core.hilbert(dumps(x), list(box), method))


def grid_from_points(points):
    return json.loads(_core.grid_from_points(dumps(points)))


def hf_experiment(trials=500, dmax=3, box=(4, 4, 4), seed=42):
    return json.loads(_core.hf_experiment(trials, dmax, list(box), seed))
