"""Configuration settings for the spin-bath simulator."""

import os
from typing import Optional
from pydantic import BaseModel, Field, field_validator
from dotenv import load_dotenv

load_dotenv()


class Settings(BaseModel):
    """Application settings."""
    
    # Logging
    log_level: str = Field(default="INFO")
    log_file: str = Field(default="spinbath.log")
    
    # Parallelism
    worker_threads: int = Field(default=1, ge=1)
    chunk_elements: int = Field(default=1 << 20, ge=1, description="Factor evaluations per time-chunk work unit")
    
    # Numerics
    absorption_gap: int = Field(default=128, ge=1, description="Exponent gap beyond which the smaller addend is dropped")
    debug_checks: bool = Field(default=False, description="Assert ScaledComplex normalization after every reduction")
    
    # Experiment defaults
    burn_in_fraction: float = Field(default=0.1, gt=0.0, lt=1.0)
    decay_threshold: float = Field(default=-1.0)
    
    # Oracle guards
    max_term_spins: int = Field(default=12, ge=1)
    max_rsum_spins: int = Field(default=20, ge=1)
    max_statevector_spins: int = Field(default=12, ge=1)
    
    @field_validator("log_level", mode="before")
    @classmethod
    def parse_log_level(cls, v):
        """Normalize the log level name."""
        if isinstance(v, str):
            return v.strip().upper() or "INFO"
        return v
    
    @property
    def file_logging_enabled(self) -> bool:
        """Check if a log file was configured."""
        return bool(self.log_file.strip())


def _env_flag(name: str, default: str = "false") -> bool:
    return os.getenv(name, default).strip().lower() in ("1", "true", "yes", "on")


def _env_int(name: str) -> Optional[int]:
    value = os.getenv(name)
    return int(value) if value and value.strip() else None


# Global settings instance - manually load from environment
def _load_settings():
    """Load settings from environment variables."""
    return Settings(
        log_level=os.getenv("LOG_LEVEL", "INFO"),
        log_file=os.getenv("LOG_FILE", "spinbath.log"),
        worker_threads=_env_int("WORKER_THREADS") or os.cpu_count() or 1,
        chunk_elements=_env_int("CHUNK_ELEMENTS") or 1 << 20,
        absorption_gap=_env_int("ABSORPTION_GAP") or 128,
        debug_checks=_env_flag("DEBUG_CHECKS"),
        burn_in_fraction=float(os.getenv("BURN_IN_FRACTION", "0.1")),
        decay_threshold=float(os.getenv("DECAY_THRESHOLD", "-1.0")),
        max_term_spins=_env_int("MAX_TERM_SPINS") or 12,
        max_rsum_spins=_env_int("MAX_RSUM_SPINS") or 20,
        max_statevector_spins=_env_int("MAX_STATEVECTOR_SPINS") or 12,
    )

settings = _load_settings()
