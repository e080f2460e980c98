"""WRT SO(3) invariants and unified invariants of rational homology spheres, exact arithmetic."""

import json
from fractions import Fraction

from . import _core
from ._core import Error, ParseError, ValidationError, h1_order, describe, jacobi

__all__ = [
    "Error", "ParseError", "ValidationError",
    "tau", "unified", "evaluate", "verify", "h1_order", "describe", "dedekind_sum", "jacobi",
]


def tau(manifold, r, alt_chains=False):
    """tau_M at xi = exp(2 pi i / r) as a dict with the power-basis coefficients."""
    return json.loads(_core.tau_json(manifold, r, alt_chains))


def unified(manifold, K):
    """The truncated unified invariant, in the same JSON form the CLI writes."""
    return json.loads(_core.unified_json(manifold, K))


def evaluate(element, r, normalized=True):
    if not isinstance(element, str):
        element = json.dumps(element)
    return json.loads(_core.eval_json(element, r, normalized))


def verify(suite, r=9, d=3):
    return json.loads(_core.verify_json(suite, r, d))


def dedekind_sum(b, a):
    return Fraction(_core.dedekind_sum(b, a))
