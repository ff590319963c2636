"""Exact computations in graded quotients R = k[x1..xn]/I.

Ideals are given as text, e.g. ``"x1^2, x1*x2 + x2^2"``. Every function
returns plain Python data decoded from the library's JSON reports.
"""

import json as _json

from . import _core
from ._core import NonHomogeneousError, ParseError, generator_count_N

__all__ = [
    "NonHomogeneousError",
    "ParseError",
    "example",
    "ezd_complement",
    "ezd_pair",
    "generator_count_N",
    "generic_ezd",
    "hilbert",
    "normalize_ideal",
    "rank",
    "scan",
    "schema_version",
    "socle",
    "wlp",
    "yoshino",
]

schema_version = _core.schema_version


def normalize_ideal(ideal, nvars=0):
    """Parsed and normalized generators together with the detected kind."""
    return _json.loads(_core.normalize_ideal(ideal, nvars))


def hilbert(ideal, nvars=0, bound=None):
    """Hilbert function H(0..bound) of P/I."""
    return _json.loads(_core.hilbert(ideal, nvars, bound))


def generic_ezd(ideal, nvars=0, bound=None, trials=3, seed=0):
    """Whether a general linear form is part of an exact zero divisor pair."""
    return _json.loads(_core.generic_ezd(ideal, nvars, bound, trials, seed))


def ezd_pair(ideal, x, y, nvars=0, bound=None):
    """Degree-by-degree check that (x, y) is an exact zero divisor pair."""
    return _json.loads(_core.ezd_pair(ideal, x, y, nvars, bound))


def ezd_complement(ideal, form, nvars=0, bound=None):
    """Canonical exact complement of ``form``, if one exists."""
    return _json.loads(_core.ezd_complement(ideal, form, nvars, bound))


def wlp(ideal, nvars=0, bound=None, trials=3, seed=0):
    """Weak Lefschetz check with sampled linear forms."""
    return _json.loads(_core.wlp(ideal, nvars, bound, trials, seed))


def socle(ideal, nvars=0, bound=None):
    return _json.loads(_core.socle(ideal, nvars, bound))


def yoshino(ideal, nvars=0, bound=None):
    return _json.loads(_core.yoshino(ideal, nvars, bound))


def example(n, d):
    """The pair (x1 + ... + xn, Q) in k[x1..xn]/((x1^d) + (x2..xn)^d)."""
    return _json.loads(_core.example(n, d))


def scan(family, nvars=2, max_degree=2, bound=0, trials=3, seed=0, workers=1,
         symmetry=True, require_artinian=True, full=False):
    """Exhaustive scan of the ``"monomial"`` or ``"binomial"`` family."""
    return _json.loads(_core.scan(family, nvars, max_degree, bound, trials, seed,
                                  workers, symmetry, require_artinian, full))


def rank(rows):
    """Exact rank of a matrix of ints, Fractions or rational strings."""
    return _core.rank([[str(x) for x in row] for row in rows])
