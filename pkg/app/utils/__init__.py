"""Utilities module."""

from .rng import random_stream, run_streams
from .xrange import (
    ScaledComplex,
    sc_from,
    sc_mul,
    sc_add,
    sc_log10_abs,
    sc_to,
    scaled_product,
    scaled_add,
    scaled_log10_abs,
)
from .validators import (
    validate_positive_int,
    validate_seed,
    validate_int_list,
    validate_scenario,
    validate_branch,
    validate_fraction,
    validate_positive_float,
    format_float,
)

__all__ = [
    # Random streams
    "random_stream",
    "run_streams",
    # Extended-range numerics
    "ScaledComplex",
    "sc_from",
    "sc_mul",
    "sc_add",
    "sc_log10_abs",
    "sc_to",
    "scaled_product",
    "scaled_add",
    "scaled_log10_abs",
    # Validators
    "validate_positive_int",
    "validate_seed",
    "validate_int_list",
    "validate_scenario",
    "validate_branch",
    "validate_fraction",
    "validate_positive_float",
    "format_float",
]
