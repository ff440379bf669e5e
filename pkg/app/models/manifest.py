"""Run manifest schema."""

from datetime import datetime, timezone
from typing import Any, Dict

from pydantic import BaseModel, Field

from app import __version__


class RunManifest(BaseModel):
    """Self-contained record of one CLI invocation."""
    tool_version: str = Field(default=__version__)
    subcommand: str = Field(...)
    parameters: Dict[str, Any] = Field(default_factory=dict)
    seed: int = Field(..., ge=0)
    wall_time_seconds: float = Field(default=0.0, ge=0.0)
    summary: Dict[str, float] = Field(default_factory=dict)
    created_at: datetime = Field(default_factory=lambda: datetime.now(timezone.utc))
