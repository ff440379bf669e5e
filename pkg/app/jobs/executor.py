"""Worker pool for time chunks and ensemble members."""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

import numpy as np

from app.config import settings

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def resolve_threads(threads: Optional[int]) -> int:
    """Requested thread count, falling back to the configured default."""
    if threads is None:
        return settings.worker_threads
    return max(1, int(threads))


def run_ordered(func: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None) -> List[R]:
    """Apply func to every item and return the results in input order.
    
    Work units are defined by the caller, never by the pool size, so the
    output does not depend on the thread count.
    """
    items = list(items)
    workers = min(resolve_threads(threads), len(items)) if items else 1
    
    if workers <= 1:
        return [func(item) for item in items]
    
    logger.debug(f"Dispatching {len(items)} work units on {workers} threads")
    with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="spinbath") as pool:
        return list(pool.map(func, items))


def time_chunks(times: np.ndarray, n_spins: int, chunk_elements: Optional[int] = None) -> List[np.ndarray]:
    """Split a time grid into chunks of about chunk_elements factor evaluations.
    
    Chunk boundaries depend only on the grid and the bath size.
    """
    chunk_elements = chunk_elements or settings.chunk_elements
    rows = max(1, chunk_elements // max(1, n_spins))
    return [times[start:start + rows] for start in range(0, times.size, rows)]

