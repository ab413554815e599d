"""Numerical solvers for the fractional linear oscillator."""

from ._core import (
    ConvergenceError,
    DomainError,
    Error,
    GridMismatchError,
    InvalidArgument,
    NonFiniteError,
    OverflowError,
    ParseError,
    Problem,
    StabilityError,
    UnsupportedOrderError,
    builtin_names,
    converge,
    gamma,
    mittag_leffler,
    solve,
    stability_threshold,
)

__all__ = [
    "ConvergenceError",
    "DomainError",
    "Error",
    "GridMismatchError",
    "InvalidArgument",
    "NonFiniteError",
    "OverflowError",
    "ParseError",
    "Problem",
    "StabilityError",
    "UnsupportedOrderError",
    "builtin_names",
    "converge",
    "gamma",
    "mittag_leffler",
    "solve",
    "stability_threshold",
]
