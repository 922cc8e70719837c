"""Order-preserving fan-out over a process pool."""

from multiprocessing import Pool
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(func: Callable[[T], R], items: Iterable[T], jobs: int = 1) -> list[R]:
    """
    Apply func to every item, results in input order whatever the worker count.

    Args:
        func: A picklable top-level function
        items: Work items
        jobs: Worker processes; 1 or fewer runs in-process

    Returns:
        List of results aligned with items
    """
    work_items = list(items)
    if jobs > 1 and len(work_items) > 1:
        with Pool(processes=min(jobs, len(work_items))) as pool:
            return pool.map(func, work_items)
    return [func(item) for item in work_items]
