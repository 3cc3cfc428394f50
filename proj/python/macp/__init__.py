"""Exact rank-2 oriented matroid posets.

Elements are 0-based in every Python call; the text formats
(``n=3;loops=;classes=[+1][+3][+2]``) are 1-based. Matrix entries may be
ints, ``fractions.Fraction`` values or ``"p/q"`` strings and come back as
``Fraction``.
"""

import json
from fractions import Fraction

from . import _core
from ._core import (  # noqa: F401
    Error,
    FlagOM,
    MathError,
    ParseError,
    Rank2OM,
    ResourceError,
    canonical_form,
    cell_dimension,
    check_basis_orientation,
    coatoms_CR,
    cocircuits,
    convex_hull,
    covectors,
    enumerate_macp2,
    enumerate_macp12,
    flag_cell_dimension,
    flag_rank,
    iota_embed,
    max_covector_below,
    parallel_class,
    rank_h,
    relabel,
    reorient,
    suite_names,
    validate_covector_axioms,
    validate_grassmann_plucker,
    weak_leq,
    weak_leq_chirotope,
)


def _entry(value):
    if isinstance(value, bool):
        raise TypeError("matrix entries must be rational, not bool")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, str):
        return value
    raise TypeError(f"matrix entries must be int, Fraction or 'p/q' strings, got {type(value).__name__}")


def _to_text(matrix):
    rows = matrix if matrix and isinstance(matrix[0], (list, tuple)) else [matrix]
    return [[_entry(v) for v in row] for row in rows]


def _to_fractions(matrix):
    return [[Fraction(v) for v in row] for row in matrix]


def mu(matrix):
    """Oriented matroid of the row space of a 2 x n rational matrix."""
    return _core._mu(_to_text(matrix))


def nu(y, x):
    """Flag of the line spanned by row y inside the row space of x."""
    return _core._nu(_to_text(y), _to_text(x))


def sample_cell(om, count, seed=0):
    return [_to_fractions(x) for x in _core._sample_cell(om, count, seed)]


def sample_boundary(om, face, count, seed=0):
    samples, perturbations, failures = _core._sample_boundary(om, face, count, seed)
    return {
        "samples": [_to_fractions(x) for x in samples],
        "perturbations": perturbations,
        "failures": failures,
    }


def sample_flag_cell(flag, count, seed=0):
    return [(_to_fractions(y), _to_fractions(x)) for y, x in _core._sample_flag_cell(flag, count, seed)]


def lower_interval_homology(om):
    return json.loads(_core.lower_interval_homology(om))


def macp_homology(n, kind="macp2"):
    return json.loads(_core.macp_homology(n, kind))


def run_suite(name, n, seed=0):
    return json.loads(_core._run_suite(name, n, seed))
