"""Cells of double Bott-Samelson varieties."""

from fractions import Fraction

from . import _core
from ._core import (
    Error,
    FactorizationFailed,
    InvalidInput,
    LimitExceeded,
    Setup,
    convert_wy,
    criterion_count,
    enumerate,
    monomial,
    profile,
    psi,
    run_criterion,
)

__all__ = [
    "Error",
    "FactorizationFailed",
    "InvalidInput",
    "LimitExceeded",
    "Setup",
    "cell_test",
    "convert_wy",
    "criterion_count",
    "enumerate",
    "factorize_to_z",
    "monomial",
    "profile",
    "psi",
    "run_criterion",
]


def _text(xs):
    return [str(Fraction(x)) for x in xs]


def cell_test(setup, mask, point):
    """True if the point lies in the cell of ``mask``."""
    return _core.cell_test(setup, mask, _text(point))


def factorize_to_z(setup, mask, xi):
    """Chart coordinates z from factor parameters xi (zero on J)."""
    return [Fraction(x) for x in _core.factorize_to_z(setup, mask, _text(xi))]
