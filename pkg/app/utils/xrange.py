"""Extended-range complex arithmetic.

A value is stored as ``mantissa * 2**exp2`` with ``0.5 <= |mantissa| < 1``
(or the canonical zero ``0 * 2**0``). Products of a million factors of
modulus below one keep full relative precision this way, and unlike a
log-polar form the representation still supports true addition, which
Lambda(t) = Gamma(t) - Gamma^d needs.

The array kernels work on the last axis and are shared by the scalar
``ScaledComplex`` type, so both paths round identically.
"""

import logging
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from app.config import settings
from app.exceptions import ExponentOverflowError, NonFiniteError, RangeOverflowError

logger = logging.getLogger(__name__)

LOG10_2 = math.log10(2.0)
INT64_MIN = -(2 ** 63)
INT64_MAX = 2 ** 63 - 1

# 2**-PRODUCT_BLOCK is still a normal double, so a block of normalized
# mantissas can be multiplied natively before renormalizing.
PRODUCT_BLOCK = 256


def _scale(values: np.ndarray, shift: np.ndarray) -> np.ndarray:
    """values * 2**shift, exactly, component by component."""
    values = np.asarray(values, dtype=np.complex128)
    shift = np.asarray(shift).astype(np.int32)
    scaled = np.empty(np.broadcast_shapes(values.shape, shift.shape), dtype=np.complex128)
    scaled.real = np.ldexp(np.real(values), shift)
    scaled.imag = np.ldexp(np.imag(values), shift)
    return scaled


def normalize(values) -> Tuple[np.ndarray, np.ndarray]:
    """Split complex values into (mantissa, exp2) arrays."""
    values = np.asarray(values, dtype=np.complex128)
    _, exp2 = np.frexp(np.abs(values))
    exp2 = exp2.astype(np.int64)
    mantissa = _scale(values, -exp2)

    # frexp(|z|) and |z * 2**-e| can round to different sides of 0.5 or 1
    magnitude = np.abs(mantissa)
    high = magnitude >= 1.0
    low = (magnitude < 0.5) & (magnitude > 0.0)
    if np.any(high) or np.any(low):
        fix = high.astype(np.int64) - low.astype(np.int64)
        mantissa = _scale(mantissa, -fix)
        exp2 = exp2 + fix

    exp2 = np.where(mantissa == 0, 0, exp2)
    return mantissa, exp2


def check_normalized(mantissa: np.ndarray, exp2: np.ndarray) -> None:
    """Assert the normalization invariant (debug builds only)."""
    magnitude = np.abs(mantissa)
    zero = magnitude == 0
    assert np.all(np.isfinite(magnitude)), "non-finite mantissa"
    assert np.all(zero | ((magnitude >= 0.5) & (magnitude < 1.0))), "mantissa out of [0.5, 1)"
    assert np.all(np.where(zero, exp2 == 0, True)), "zero with non-zero exponent"


def scaled_product(factors, block: int = PRODUCT_BLOCK) -> Tuple[np.ndarray, np.ndarray]:
    """Product along the last axis, returned as (mantissa, exp2).

    Factors are normalized one by one, multiplied natively in blocks,
    and the block products renormalized until one value per row is left.
    """
    mantissa, exp2 = normalize(factors)
    if settings.debug_checks:
        check_normalized(mantissa, exp2)

    while mantissa.shape[-1] > 1:
        width = min(block, mantissa.shape[-1])
        pad = (-mantissa.shape[-1]) % width
        if pad:
            lead = mantissa.shape[:-1]
            mantissa = np.concatenate([mantissa, np.ones(lead + (pad,), dtype=np.complex128)], axis=-1)
            exp2 = np.concatenate([exp2, np.zeros(lead + (pad,), dtype=np.int64)], axis=-1)

        shape = mantissa.shape[:-1] + (-1, width)
        partial = np.prod(mantissa.reshape(shape), axis=-1)
        exponents = np.sum(exp2.reshape(shape), axis=-1)
        mantissa, shift = normalize(partial)
        exp2 = np.where(mantissa == 0, 0, exponents + shift)

        if settings.debug_checks:
            check_normalized(mantissa, exp2)

    return mantissa[..., 0], exp2[..., 0]


def scaled_add(
    m1: np.ndarray, e1: np.ndarray, m2: np.ndarray, e2: np.ndarray, gap: int = None
) -> Tuple[np.ndarray, np.ndarray]:
    """Elementwise sum of two extended-range arrays.

    When the exponents differ by more than ``gap`` the smaller operand is
    absorbed and the result equals the larger one.
    """
    gap = settings.absorption_gap if gap is None else gap
    m1, m2 = np.asarray(m1, dtype=np.complex128), np.asarray(m2, dtype=np.complex128)
    e1, e2 = np.asarray(e1, dtype=np.int64), np.asarray(e2, dtype=np.int64)

    zero1, zero2 = m1 == 0, m2 == 0
    top = np.where(zero1, e2, np.where(zero2, e1, np.maximum(e1, e2)))
    d1, d2 = e1 - top, e2 - top

    # ldexp by a large negative shift would quietly round to zero; absorb explicitly
    t1 = np.where(zero1 | (d1 < -gap), 0, _scale(m1, np.maximum(d1, -gap - 1)))
    t2 = np.where(zero2 | (d2 < -gap), 0, _scale(m2, np.maximum(d2, -gap - 1)))

    mantissa, shift = normalize(t1 + t2)
    exp2 = np.where(mantissa == 0, 0, top + shift)
    return mantissa, exp2


def scaled_log10_abs(mantissa: np.ndarray, exp2: np.ndarray) -> np.ndarray:
    """log10 of the modulus; -inf for the canonical zero."""
    with np.errstate(divide="ignore"):
        return np.log10(np.abs(mantissa)) + np.asarray(exp2, dtype=np.float64) * LOG10_2


def scaled_to_native(mantissa: np.ndarray, exp2: np.ndarray) -> np.ndarray:
    """Convert to native complex; overflow raises, underflow goes to zero."""
    exp2 = np.asarray(exp2, dtype=np.int64)
    if np.any((exp2 > 1024) & (mantissa != 0)):
        raise RangeOverflowError("value exceeds the native double range")
    # Clip keeps ldexp's int argument in range; anything below -1100 is zero anyway
    return _scale(mantissa, np.clip(exp2, -1100, 1024))


@dataclass(frozen=True)
class ScaledComplex:
    """A complex number ``mantissa * 2**exp2`` with unbounded range."""
    mantissa: complex
    exp2: int

    @classmethod
    def from_arrays(cls, mantissa, exp2) -> "ScaledComplex":
        """Wrap 0-d kernel outputs."""
        exp2 = int(exp2)
        if not INT64_MIN <= exp2 <= INT64_MAX:
            raise ExponentOverflowError(f"binary exponent {exp2} outside the 64-bit range")
        return cls(complex(mantissa), exp2)

    @property
    def is_zero(self) -> bool:
        return self.mantissa == 0

    def __mul__(self, other: "ScaledComplex") -> "ScaledComplex":
        return sc_mul(self, other)

    def __add__(self, other: "ScaledComplex") -> "ScaledComplex":
        return sc_add(self, other)

    def __neg__(self) -> "ScaledComplex":
        return ScaledComplex(-self.mantissa, self.exp2)

    def __sub__(self, other: "ScaledComplex") -> "ScaledComplex":
        return sc_add(self, -other)

    def conjugate(self) -> "ScaledComplex":
        return ScaledComplex(self.mantissa.conjugate(), self.exp2)

    def log10_abs(self) -> float:
        return sc_log10_abs(self)

    def to_complex(self) -> complex:
        return sc_to(self)


ZERO = ScaledComplex(0j, 0)


def sc_from(z) -> ScaledComplex:
    """Normalize a finite native complex."""
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise NonFiniteError(f"cannot scale non-finite value {z}")
    mantissa, exp2 = normalize(z)
    return ScaledComplex.from_arrays(mantissa, exp2)


def sc_mul(x: ScaledComplex, y: ScaledComplex) -> ScaledComplex:
    """Product, renormalized; the exponent is exact."""
    if x.is_zero or y.is_zero:
        return ZERO
    mantissa, shift = normalize(x.mantissa * y.mantissa)
    return ScaledComplex.from_arrays(mantissa, x.exp2 + y.exp2 + int(shift))


def sc_add(x: ScaledComplex, y: ScaledComplex) -> ScaledComplex:
    """Sum with absorption of operands more than ``absorption_gap`` bits smaller."""
    mantissa, exp2 = scaled_add(x.mantissa, x.exp2, y.mantissa, y.exp2)
    return ScaledComplex.from_arrays(mantissa, exp2)


def sc_log10_abs(x: ScaledComplex) -> float:
    """log10|x|, -inf for zero."""
    if x.is_zero:
        return float("-inf")
    return math.log10(abs(x.mantissa)) + x.exp2 * LOG10_2


def sc_to(x: ScaledComplex) -> complex:
    """Native value of x."""
    return complex(scaled_to_native(x.mantissa, x.exp2))
