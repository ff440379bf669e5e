"""Explicit term enumeration used by the brute-force oracles."""

import math

import numpy as np
from pydantic import BaseModel, Field, model_validator

from .enums import BranchTag


class TermList(BaseModel):
    """The 4^N (c_lambda, E_lambda) pairs of one Gamma branch.
    
    Entries are sorted by energy; ties keep the lexicographic enumeration
    order over the per-spin choices (spin 1 most significant).
    """
    coefficients: np.ndarray = Field(..., description="c_lambda")
    energies: np.ndarray = Field(..., description="E_lambda, ascending")
    static: np.ndarray = Field(..., description="True where no spin carries a phase factor")
    n: int = Field(..., ge=1)
    branch: BranchTag = Field(...)
    
    class Config:
        """Pydantic config."""
        arbitrary_types_allowed = True
        frozen = True
    
    @model_validator(mode="after")
    def check_entries(self):
        """4^N entries, sorted by energy."""
        expected = 4 ** self.n
        if not (self.coefficients.size == self.energies.size == self.static.size == expected):
            raise ValueError(f"expected {expected} entries for N={self.n}")
        if np.any(np.diff(self.energies) < 0):
            raise ValueError("entries must be sorted by energy")
        return self
    
    def __len__(self) -> int:
        return int(self.coefficients.size)
    
    @property
    def entries(self) -> list:
        """(c_lambda, E_lambda) pairs."""
        return list(zip(self.coefficients.tolist(), self.energies.tolist()))
    
    @property
    def magnitudes(self) -> np.ndarray:
        """r_lambda = |c_lambda|."""
        return np.abs(self.coefficients)
    
    @property
    def phases(self) -> np.ndarray:
        """phi_lambda = arg c_lambda."""
        return np.angle(self.coefficients)

    def diagonal_sum(self) -> complex:
        """Compensated sum of the time-independent coefficients."""
        static = self.coefficients[self.static]
        return complex(math.fsum(static.real.tolist()), math.fsum(static.imag.tolist()))

    def phase_roughness(self) -> float:
        """Mean absolute phase jump between energy-adjacent dynamic terms.

        Jumps are wrapped to [-pi, pi). Zero-weight terms carry no phase and
        are skipped.
        """
        dynamic = self.coefficients[~self.static & (self.coefficients != 0)]
        if dynamic.size < 2:
            return 0.0
        jumps = np.diff(np.angle(dynamic))
        wrapped = np.remainder(jumps + math.pi, 2.0 * math.pi) - math.pi
        return float(np.mean(np.abs(wrapped)))
