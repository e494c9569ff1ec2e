"""
Deterministic parallel sweeps over independent parameter values
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar

from config import settings

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def run_sweep(task: Callable[[T], R], items: Sequence[T], workers: Optional[int] = None) -> List[R]:
    """Apply task to every item; results come back in input order

    task must be picklable (a module-level function or a partial of one)
    when more than one worker is used.
    """
    workers = settings.SWEEP_WORKERS if workers is None else workers
    if workers <= 1 or len(items) < 2:
        return [task(item) for item in items]

    chunksize = max(1, len(items) // (4 * workers))
    logger.debug("sweeping %d items on %d workers", len(items), workers)
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(task, items, chunksize=chunksize))
