"""
Ordered worker pool

Sub-evaluations run on a thread pool sized by runtime.threads
(BERGOPLAB_THREADS); results come back in submission order.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from loguru import logger

from .config import config

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(fn: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None) -> List[R]:
    items = list(items)
    threads = config.threads if threads is None else max(1, int(threads))
    if threads == 1 or len(items) <= 1:
        return [fn(item) for item in items]

    logger.debug(f"dispatching {len(items)} tasks on {threads} threads")
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(fn, item) for item in items]
        return [future.result() for future in futures]
