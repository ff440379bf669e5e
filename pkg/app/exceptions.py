"""Exceptions raised by the simulator."""

from pathlib import Path
from typing import Optional, Union


class SpinBathError(Exception):
    """Base class for simulator errors."""


class NonFiniteError(SpinBathError, ValueError):
    """A value with a NaN or infinite component was supplied."""


class ExponentOverflowError(SpinBathError, OverflowError):
    """A binary exponent left the signed 64-bit range."""


class RangeOverflowError(SpinBathError, OverflowError):
    """An extended-range value does not fit a native double."""


class LengthMismatchError(SpinBathError, ValueError):
    """Per-spin inputs disagree on the bath size."""

    def __init__(self, **lengths: int):
        self.lengths = lengths
        detail = ", ".join(f"{name}={size}" for name, size in lengths.items())
        super().__init__(f"Bath size mismatch: {detail}")


class NormalizationDegenerateError(SpinBathError):
    """The instance carries no off-diagonal content to normalize by."""


class BathTooLargeError(SpinBathError, ValueError):
    """A brute-force oracle was asked for more spins than it supports."""

    def __init__(self, n: int, limit: int, oracle: str):
        self.n = n
        self.limit = limit
        super().__init__(f"{oracle} supports at most {limit} spins, got N={n}")


class HermiticityError(SpinBathError):
    """An expectation value came out with a significant imaginary part."""


class UsageError(SpinBathError):
    """Invalid command-line or config-file input."""

    def __init__(self, message: str, key: Optional[str] = None):
        self.key = key
        super().__init__(message)


class OutputError(SpinBathError):
    """Writing a result file failed."""

    def __init__(self, path: Union[str, Path], reason: str):
        self.path = Path(path)
        super().__init__(f"Cannot write {self.path}: {reason}")
