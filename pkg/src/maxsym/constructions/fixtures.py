"""Committed ribbon structures for the bordered surfaces with maximal symmetry at alpha = 19, 29.

A fixture keeps the graph and its symmetry group. It replaces the geometric rotation
(h_0, ..., h_{d-1}) at each vertex of degree d by (h_0, h_k, h_2k, ...) with a step k
that depends only on d, and it twists either every band or none. Both choices commute
with the rotation group, so the thickened surface stays invariant.

:func:`search` reproduces the table by scanning steps and twists in increasing order
and returning the first hit.
"""
from __future__ import annotations

from itertools import product
from math import gcd
from typing import NamedTuple

from ..orbifold import SurfaceType
from .graphs import build_platonic, build_triacontahedron
from .ribbon import RibbonGraph, ribbon_from_embedding, ribbon_surface_type


class Fixture(NamedTuple):
    model: str
    steps: tuple[tuple[int, int], ...]   # (degree, step) pairs
    twist: int
    expect: SurfaceType


FIXTURES: dict[str, Fixture] = {
    "ico-S0-20": Fixture("platonic:I", ((5, 1),), 0, SurfaceType(True, 0, 20)),
    "ico-N14-6": Fixture("platonic:I", ((5, 1),), 1, SurfaceType(False, 14, 6)),
    "ico-S4-12": Fixture("platonic:I", ((5, 2),), 0, SurfaceType(True, 4, 12)),
    "ico-N10-10": Fixture("platonic:I", ((5, 2),), 1, SurfaceType(False, 10, 10)),
    "tri-S0-30": Fixture("triacontahedron", ((5, 1), (3, 1)), 0, SurfaceType(True, 0, 30)),
    "tri-S9-12": Fixture("triacontahedron", ((5, 1), (3, 1)), 1, SurfaceType(True, 9, 12)),
    "tri-S5-20": Fixture("triacontahedron", ((5, 2), (3, 1)), 0, SurfaceType(True, 5, 20)),
}


def _base(model: str):
    if model == "platonic:I":
        graph, rot, _ = build_platonic("I")
    elif model == "triacontahedron":
        graph, rot = build_triacontahedron()
    else:
        raise ValueError(f"no fixtures on model {model!r}")
    return ribbon_from_embedding(graph), rot


def apply_pattern(R: RibbonGraph, steps: dict[int, int], twist: int) -> RibbonGraph:
    per_vertex = [steps.get(len(rot), 1) for rot in R.rotation]
    return R.with_rotation_steps(per_vertex).with_twists([twist] * R.E)


def load(name: str) -> RibbonGraph:
    try:
        fx = FIXTURES[name]
    except KeyError:
        raise ValueError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}") from None
    R, _ = _base(fx.model)
    return apply_pattern(R, dict(fx.steps), fx.twist)


def search(model: str, target: SurfaceType) -> tuple[tuple[tuple[int, int], ...], int] | None:
    """First (steps, twist) in canonical order whose ribbon thickens to ``target``."""
    R, _ = _base(model)
    degrees = sorted({len(rot) for rot in R.rotation}, reverse=True)
    choices = [[k for k in range(1, d) if gcd(k, d) == 1] for d in degrees]
    for ks in product(*choices):
        steps = tuple(zip(degrees, ks))
        for twist in (0, 1):
            if ribbon_surface_type(apply_pattern(R, dict(steps), twist)) == target:
                return steps, twist
    return None
