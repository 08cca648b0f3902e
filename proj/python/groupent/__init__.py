"""Harmonic analysis and entanglement detection on finite groups."""

from ._core import (
    DomainMismatch,
    FormatError,
    Group,
    PreconditionError,
    ShapeMismatch,
    apply_map,
    bell_state,
    bundled_groups,
    characteristic_function,
    check_ppt,
    check_separability,
    classify_map,
    fourier,
    gns,
    inverse_fourier,
    is_positive_definite,
    product,
    run,
    separable_sample,
    werner_state,
)

__all__ = [
    "DomainMismatch",
    "FormatError",
    "Group",
    "PreconditionError",
    "ShapeMismatch",
    "apply_map",
    "bell_state",
    "bundled_groups",
    "characteristic_function",
    "check_ppt",
    "check_separability",
    "classify_map",
    "fourier",
    "gns",
    "inverse_fourier",
    "is_positive_definite",
    "product",
    "run",
    "separable_sample",
    "werner_state",
]
