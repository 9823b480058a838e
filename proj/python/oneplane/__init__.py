"""Maximal 1-plane drawings.

Drawings are passed around as JSON document strings (the .opg.json format);
anything the C++ side reports as JSON is decoded here.
"""

import json
from fractions import Fraction

from . import _core
from ._core import DocumentError, DrawingError, ProofGapError

__all__ = [
    "DocumentError", "DrawingError", "ProofGapError",
    "generate", "random_tree", "saturate", "canonicalize", "is_maximal",
    "analyze", "certify", "render_svg", "census", "lp_minimum",
    "density_lower_bound", "bounds_table", "load",
]

generate = _core.generate
random_tree = _core.random_tree
saturate = _core.saturate
canonicalize = _core.canonicalize
is_maximal = _core.is_maximal
render_svg = _core.render_svg


def load(path):
    with open(path, encoding="utf-8") as f:
        return f.read()


def analyze(doc):
    return json.loads(_core.analyze(doc))


def certify(doc):
    return json.loads(_core.certify(doc))


def census(n):
    return json.loads(_core.census(n))


def lp_minimum():
    return Fraction(*_core.lp_minimum())


def density_lower_bound(n):
    return Fraction(*_core.density_lower_bound(n))


def bounds_table(start=4, stop=20):
    return json.loads(_core.bounds_table(start, stop))
