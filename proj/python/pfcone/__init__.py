"""Nonnegative-matrix equations on the orthant: class structure, solvability
of (lambda I - P) x = b and (P - lambda I) x = b, Collatz-Wielandt bounds and
alternating sequences.

Matrices are ``{"n": k, "entries": [[...]]}`` mappings, vectors are lists or
``{"entries": [...]}`` mappings. Entries may be ints, floats or ``"p/q"``
strings. Results are plain dicts; exact rationals come back as ints or
``"p/q"`` strings.
"""

import json
from fractions import Fraction

from . import _pfcone
from ._pfcone import (
    InputError,
    InternalInconsistency,
    ModeMismatch,
    NumericFailure,
    PreconditionError,
)

__all__ = [
    "analyze",
    "solve1",
    "solve2",
    "cw",
    "alt",
    "check",
    "run_cli",
    "InputError",
    "PreconditionError",
    "NumericFailure",
    "ModeMismatch",
    "InternalInconsistency",
]


def _entry(value):
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, bool):
        raise TypeError("booleans are not matrix entries")
    return value


def _matrix(m):
    if isinstance(m, dict):
        rows = m["entries"]
    else:
        rows = m
    rows = [[_entry(v) for v in row] for row in rows]
    return json.dumps({"n": len(rows), "entries": rows})


def _vector(v):
    if isinstance(v, dict):
        v = v["entries"]
    return json.dumps({"entries": [_entry(e) for e in v]})


def _scalar(s):
    return str(_entry(s))


def analyze(matrix, mode="auto"):
    return json.loads(_pfcone.analyze(_matrix(matrix), mode))


def solve1(matrix, lam, b, mode="auto"):
    return json.loads(_pfcone.solve1(_matrix(matrix), _scalar(lam), _vector(b), mode))


def solve2(matrix, lam, b, mode="auto"):
    return json.loads(_pfcone.solve2(_matrix(matrix), _scalar(lam), _vector(b), mode))


def cw(matrix, x=None, mode="auto"):
    return json.loads(_pfcone.cw(_matrix(matrix), None if x is None else _vector(x), mode))


def alt(matrix, shift, x, max_steps=None, mode="auto"):
    return json.loads(_pfcone.alt(_matrix(matrix), _scalar(shift), _vector(x), max_steps, mode))


def check(matrix, prop, mode="auto"):
    return json.loads(_pfcone.check(_matrix(matrix), prop, mode))


def run_cli(args):
    """Run the command-line front end in-process; returns (code, stdout, stderr)."""
    return _pfcone.run_cli(list(args))
