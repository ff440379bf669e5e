"""Validation utilities for command-line and config-file values."""

import math
import re
from typing import List, Optional, Tuple

from app.models.enums import BranchTag, ScenarioTag

UINT64_MAX = 2 ** 64 - 1

SCENARIO_ALIASES = {
    "a": ScenarioTag.A,
    "b": ScenarioTag.B,
    "c": ScenarioTag.C,
    "restricted-obs": ScenarioTag.RESTRICTED_OBSERVABLE_ONLY,
    "restricted_obs": ScenarioTag.RESTRICTED_OBSERVABLE_ONLY,
    "restricted": ScenarioTag.RESTRICTED_OBSERVABLE_ONLY,
}


def validate_positive_int(value) -> Tuple[bool, Optional[int], Optional[str]]:
    """
    Validate a strictly positive integer.
    
    Returns:
        tuple: (is_valid, value, error_message)
    """
    if isinstance(value, bool):
        return False, None, "Expected an integer"
    if isinstance(value, int):
        number = value
    else:
        text = str(value).strip().replace("_", "")
        # Allow scientific shorthand such as 1e6
        if re.match(r'^\d+(\.0*)?([eE]\+?\d+)?$', text):
            as_float = float(text)
            if not as_float.is_integer():
                return False, None, "Expected an integer"
            number = int(as_float)
        else:
            return False, None, "Expected an integer"
    
    if number < 1:
        return False, None, "Must be at least 1"
    return True, number, None


def validate_seed(value) -> Tuple[bool, Optional[int], Optional[str]]:
    """Validate a 64-bit unsigned seed."""
    if isinstance(value, bool):
        return False, None, "Seed must be an integer"
    try:
        seed = int(str(value).strip())
    except ValueError:
        return False, None, "Seed must be an integer"
    
    if seed < 0 or seed > UINT64_MAX:
        return False, None, "Seed must fit in 64 unsigned bits"
    return True, seed, None


def validate_int_list(value) -> Tuple[bool, Optional[List[int]], Optional[str]]:
    """Validate a comma-separated list of positive integers."""
    items = value if isinstance(value, (list, tuple)) else [s for s in str(value).split(",") if s.strip()]
    if not items:
        return False, None, "List cannot be empty"
    
    parsed = []
    for item in items:
        ok, number, error = validate_positive_int(item)
        if not ok:
            return False, None, f"{item!r}: {error}"
        parsed.append(number)
    return True, parsed, None


def validate_scenario(value) -> Tuple[bool, Optional[ScenarioTag], Optional[str]]:
    """Validate a scenario name (a, b, c, restricted-obs)."""
    if isinstance(value, ScenarioTag):
        return True, value, None
    scenario = SCENARIO_ALIASES.get(str(value).strip().lower())
    if scenario is None:
        return False, None, "Expected one of a, b, c, restricted-obs"
    return True, scenario, None


def validate_branch(value) -> Tuple[bool, Optional[BranchTag], Optional[str]]:
    """Validate a branch selector (0 or 1)."""
    if isinstance(value, BranchTag):
        return True, value, None
    text = str(value).strip()
    if text not in ("0", "1"):
        return False, None, "Expected 0 or 1"
    return True, BranchTag(text), None


def validate_fraction(value) -> Tuple[bool, Optional[float], Optional[str]]:
    """Validate a number strictly between 0 and 1."""
    try:
        fraction = float(value)
    except (TypeError, ValueError):
        return False, None, "Expected a number"
    
    if not 0.0 < fraction < 1.0:
        return False, None, "Must lie strictly between 0 and 1"
    return True, fraction, None


def validate_positive_float(value) -> Tuple[bool, Optional[float], Optional[str]]:
    """Validate a finite number above zero."""
    try:
        number = float(value)
    except (TypeError, ValueError):
        return False, None, "Expected a number"
    
    if not math.isfinite(number) or number <= 0.0:
        return False, None, "Must be a finite number above 0"
    return True, number, None


def format_float(value: float) -> str:
    """Decimal text with 17 significant digits."""
    return f"{value:.17g}"
