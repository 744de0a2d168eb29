"""Order-preserving map that honours MORSE_RESOLVE_THREADS (0 or unset = auto)."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")

ENV_VAR = "MORSE_RESOLVE_THREADS"
# below this many items the pool start-up costs more than it saves
AUTO_MIN_ITEMS = 512


def worker_count(n_items: int) -> int:
    raw = os.environ.get(ENV_VAR, "0").strip() or "0"
    try:
        requested = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
    if requested < 0:
        raise ValueError(f"{ENV_VAR} must be >= 0")
    if requested == 0:
        if n_items < AUTO_MIN_ITEMS:
            return 1
        requested = os.cpu_count() or 1
    return max(1, min(requested, n_items))


def pmap(fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
    items = list(items)
    workers = worker_count(len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))
