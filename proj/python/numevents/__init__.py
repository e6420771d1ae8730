"""Exact classification of finite sets of numerical events."""

from ._core import (
    ArityError,
    Family,
    PreconditionError,
    ValidationError,
    find_witness,
    is_varying,
    verify_theorems,
)

__all__ = [
    "ArityError",
    "Family",
    "PreconditionError",
    "ValidationError",
    "find_witness",
    "is_varying",
    "verify_theorems",
]
