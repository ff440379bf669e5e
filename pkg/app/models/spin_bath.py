"""Domain types of the spin-bath model: couplings, states, observables."""

from typing import List

import numpy as np
from pydantic import BaseModel, Field, field_validator, model_validator

from app.exceptions import LengthMismatchError, NonFiniteError

NORM_TOLERANCE = 1e-12


def _frozen_array(values, dtype) -> np.ndarray:
    """Copy values into a read-only 1-d array."""
    array = np.array(values, dtype=dtype, copy=True).reshape(-1)
    array.setflags(write=False)
    return array


def _require_finite(array: np.ndarray, name: str) -> np.ndarray:
    if not np.all(np.isfinite(array)):
        raise NonFiniteError(f"{name} contains non-finite entries")
    return array


def _to_complex(value, name: str) -> complex:
    value = complex(value)
    if not (np.isfinite(value.real) and np.isfinite(value.imag)):
        raise NonFiniteError(f"{name} must be finite, got {value}")
    return value


class CouplingSet(BaseModel):
    """Coupling constants g_i (radians per unit time, hbar = 1)."""
    g: np.ndarray = Field(..., description="Ordered coupling constants")
    
    class Config:
        """Pydantic config."""
        arbitrary_types_allowed = True
        frozen = True
    
    @field_validator("g", mode="before")
    @classmethod
    def parse_g(cls, v):
        """Convert to a read-only float array."""
        array = _require_finite(_frozen_array(v, np.float64), "g")
        if array.size < 1:
            raise ValueError("at least one coupling is required")
        return array
    
    @property
    def n(self) -> int:
        """Bath size."""
        return int(self.g.size)


class BathState(BaseModel):
    """Initial environment state: one (alpha_i, beta_i) pair per spin."""
    alpha: np.ndarray = Field(..., description="Amplitudes of |up_i>")
    beta: np.ndarray = Field(..., description="Amplitudes of |down_i>")
    
    class Config:
        """Pydantic config."""
        arbitrary_types_allowed = True
        frozen = True
    
    @field_validator("alpha", "beta", mode="before")
    @classmethod
    def parse_amplitudes(cls, v, info):
        """Convert to a read-only complex array."""
        return _require_finite(_frozen_array(v, np.complex128), info.field_name)
    
    @model_validator(mode="after")
    def check_normalization(self):
        """Every spin state must be normalized."""
        if self.alpha.size != self.beta.size:
            raise LengthMismatchError(alpha=self.alpha.size, beta=self.beta.size)
        if self.alpha.size < 1:
            raise ValueError("at least one bath spin is required")
        norms = np.abs(self.alpha) ** 2 + np.abs(self.beta) ** 2
        worst = int(np.argmax(np.abs(norms - 1.0)))
        if abs(norms[worst] - 1.0) > NORM_TOLERANCE:
            raise ValueError(f"spin {worst} is not normalized: |alpha|^2+|beta|^2={norms[worst]!r}")
        return self
    
    @property
    def n(self) -> int:
        """Bath size."""
        return int(self.alpha.size)
    
    @property
    def up_weights(self) -> np.ndarray:
        """|alpha_i|^2."""
        return np.abs(self.alpha) ** 2
    
    @property
    def down_weights(self) -> np.ndarray:
        """|beta_i|^2."""
        return np.abs(self.beta) ** 2
    
    @property
    def cross(self) -> np.ndarray:
        """alpha_i^* beta_i."""
        return np.conj(self.alpha) * self.beta


class SystemAmplitudes(BaseModel):
    """Amplitudes a, b of the system states |0>, |1>."""
    a: complex = Field(...)
    b: complex = Field(...)
    
    class Config:
        """Pydantic config."""
        arbitrary_types_allowed = True
        frozen = True
    
    @field_validator("a", "b", mode="before")
    @classmethod
    def parse_amplitude(cls, v, info):
        """Accept any complex-convertible number."""
        return _to_complex(v, info.field_name)
    
    @model_validator(mode="after")
    def check_normalization(self):
        """|a|^2 + |b|^2 must be one."""
        norm = abs(self.a) ** 2 + abs(self.b) ** 2
        if abs(norm - 1.0) > NORM_TOLERANCE:
            raise ValueError(f"system state is not normalized: |a|^2+|b|^2={norm!r}")
        return self
    
    @property
    def coherence(self) -> complex:
        """a b^*."""
        return self.a * self.b.conjugate()


class ProductObservable(BaseModel):
    """A single product term of a global observable.
    
    s01 and eps_du_i are the conjugates of s10 and eps_ud_i and are not
    stored, so Hermiticity holds by construction.
    """
    s00: float = Field(...)
    s11: float = Field(...)
    s10: complex = Field(...)
    eps_uu: np.ndarray = Field(..., description="Coefficients of |up_i><up_i|")
    eps_dd: np.ndarray = Field(..., description="Coefficients of |down_i><down_i|")
    eps_ud: np.ndarray = Field(..., description="Coefficients of |up_i><down_i|")
    
    class Config:
        """Pydantic config."""
        arbitrary_types_allowed = True
        frozen = True
    
    @field_validator("s00", "s11", mode="before")
    @classmethod
    def parse_system_diagonal(cls, v, info):
        """Real and finite."""
        value = float(v)
        if not np.isfinite(value):
            raise NonFiniteError(f"{info.field_name} must be finite")
        return value
    
    @field_validator("s10", mode="before")
    @classmethod
    def parse_system_offdiagonal(cls, v):
        """Complex and finite."""
        return _to_complex(v, "s10")
    
    @field_validator("eps_uu", "eps_dd", mode="before")
    @classmethod
    def parse_diagonal_blocks(cls, v, info):
        """Real, finite per-spin coefficients."""
        return _require_finite(_frozen_array(v, np.float64), info.field_name)
    
    @field_validator("eps_ud", mode="before")
    @classmethod
    def parse_offdiagonal_blocks(cls, v):
        """Complex, finite per-spin coefficients."""
        return _require_finite(_frozen_array(v, np.complex128), "eps_ud")
    
    @model_validator(mode="after")
    def check_block_count(self):
        """All per-spin blocks describe the same bath."""
        sizes = {self.eps_uu.size, self.eps_dd.size, self.eps_ud.size}
        if len(sizes) != 1:
            raise LengthMismatchError(
                eps_uu=self.eps_uu.size, eps_dd=self.eps_dd.size, eps_ud=self.eps_ud.size
            )
        if self.eps_uu.size < 1:
            raise ValueError("at least one bath block is required")
        return self
    
    @property
    def n(self) -> int:
        """Bath size."""
        return int(self.eps_uu.size)
    
    @property
    def s01(self) -> complex:
        """Conjugate partner of s10."""
        return self.s10.conjugate()


class ObservableSum(BaseModel):
    """A general observable written as a sum of product terms."""
    terms: List[ProductObservable] = Field(..., min_length=1)
    
    class Config:
        """Pydantic config."""
        frozen = True
    
    @model_validator(mode="after")
    def check_bath_size(self):
        """Every term acts on the same bath."""
        sizes = {term.n for term in self.terms}
        if len(sizes) != 1:
            raise LengthMismatchError(**{f"term_{k}": term.n for k, term in enumerate(self.terms)})
        return self
    
    @property
    def n(self) -> int:
        """Bath size."""
        return self.terms[0].n
