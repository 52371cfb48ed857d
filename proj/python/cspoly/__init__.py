"""Exact toolkit for centrally symmetric polytopes and their antipodal quotients."""

import json
from fractions import Fraction

from . import _core
from ._core import ParseError, PreconditionError, betti_mod2, chromatic_number, f_vector, integer_homology

__version__ = _core.__version__

__all__ = [
    "ParseError",
    "PreconditionError",
    "analyze",
    "automorphisms",
    "best_rational",
    "betti_mod2",
    "build_p648",
    "chromatic_number",
    "f_vector",
    "homology",
    "integer_homology",
    "quotient",
    "rationalize",
    "search",
    "sparsify",
    "verify_rp5",
    "verify_rp6",
]


def _str(x):
    return None if x is None else str(x)


def verify_rp5(alpha="3/7", beta="4/7", gamma="5/7", points=None, integer_homology=False, chromatic=False, time_limit=600.0):
    return json.loads(_core.verify_rp5(str(alpha), str(beta), str(gamma), _str(points), integer_homology, chromatic, time_limit))


def verify_rp6(source="builtin-p790", points=None, seed=1, max_tries=32, integer_homology=False):
    return json.loads(_core.verify_rp6(source, _str(points), seed, max_tries, integer_homology))


def analyze(points=None, facets=None, thresholds=(), chromatic=True, time_limit=600.0):
    return json.loads(_core.analyze(_str(points), _str(facets), [str(t) for t in thresholds], chromatic, time_limit))


def search(n=12, dim=3, seed=1, iterations=100000, out=None):
    return json.loads(_core.search(n, dim, seed, iterations, _str(out)))


def sparsify(points=None, seed=1, scramble=None, out=None):
    return json.loads(_core.sparsify(_str(points), seed, scramble, _str(out)))


def rationalize(points, max_den=1000, out=None):
    return json.loads(_core.rationalize(str(points), max_den, _str(out)))


def quotient(points=None, out=None):
    return json.loads(_core.quotient(_str(points), _str(out)))


def homology(points=None, facets=None, integer=False):
    return json.loads(_core.homology(_str(points), _str(facets), integer))


def automorphisms(points=None, facets=None):
    return json.loads(_core.automorphisms(_str(points), _str(facets)))


def build_p648(alpha="3/7", beta="4/7", gamma="5/7"):
    return [[Fraction(x) for x in row] for row in _core.build_p648(str(alpha), str(beta), str(gamma))]


def best_rational(x, max_den):
    num, den = _core.best_rational(float(x), int(max_den))
    return Fraction(int(num), int(den))
