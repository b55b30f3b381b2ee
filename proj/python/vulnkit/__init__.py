"""Exact toolkit for graph vulnerability parameters and density thresholds.

Graphs travel as graph6 strings, exact rationals as "p/q" strings, and
properties in the CLI mini-grammar (conn:k=2, tough:t=3/2, integ:i=4, ...).
"""

import json

from . import _core

__version__ = _core.__version__

__all__ = [
    "params",
    "psi",
    "check",
    "phi",
    "threshold",
    "implies",
    "canonical_graph6",
]


def params(graph6):
    """Vulnerability parameter report for one graph, as a dict."""
    return json.loads(_core.params_json(graph6))


def psi(graph6, variant="omega"):
    """Property function of one graph: {variant, n, values: [[x, cost], ...]}."""
    return json.loads(_core.psi_json(graph6, variant))


def check(graph6, t, k, l=2):
    """Whether psi(x) >= t*x + k holds for every x in [max(l, 1), alpha]."""
    return _core.check(graph6, str(t), str(k), l)


def phi(mu, variant, n, x, y, closed=False):
    """One extremal density value as an exact string, e.g. "7" or "3/4"."""
    return _core.phi(mu, variant, n, x, y, closed)


def threshold(mu, property_spec, n, method="region", workers=0):
    """Largest minimum density forcing the property, as a dict."""
    return json.loads(_core.threshold_json(mu, property_spec, n, method, workers))


def implies(p, q, n):
    """True when every point forbidden by q is forbidden by p at order n."""
    return _core.implies(p, q, n)


def canonical_graph6(graph6):
    """Decode and re-encode a graph6 line."""
    return _core.canonical_graph6(graph6)
