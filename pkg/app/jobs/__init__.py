"""Jobs module."""

from .executor import (
    resolve_threads,
    run_ordered,
    time_chunks,
)

__all__ = [
    "resolve_threads",
    "run_ordered",
    "time_chunks",
]
