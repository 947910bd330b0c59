"""Order-preserving process pool used by the exhaustive sweeps."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

__all__ = ["parallel_map", "resolve_workers", "THREADS_ENV"]

T = TypeVar("T")
R = TypeVar("R")

THREADS_ENV = "BRUHAT_THREADS"


def resolve_workers(requested: int | None) -> int:
    """An explicit request wins, then ``BRUHAT_THREADS``, then 1."""
    if requested is None:
        env = os.environ.get(THREADS_ENV, "").strip()
        requested = int(env) if env else 1
    if requested < 1:
        raise ValueError(f"worker count must be positive, got {requested}")
    return requested


def parallel_map(fn: Callable[[T], R], items: Iterable[T], workers: int = 1) -> list[R]:
    """``[fn(x) for x in items]``, optionally spread over processes; order is kept."""
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    workers = min(workers, len(items))
    chunk = max(1, len(items) // (workers * 4))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunk))
