import os
import logging
from concurrent.futures import ThreadPoolExecutor

logger = logging.getLogger(__name__)


def max_workers():
    """
    Number of worker threads for independent sub-runs.  The
    DYNO_THREADS environment variable caps the pool size.
    """
    cap = os.environ.get("DYNO_THREADS")
    n = os.cpu_count() or 1
    if cap:
        try:
            n = max(1, min(n, int(cap)))
        except ValueError:
            logger.warning("Ignoring non-integer DYNO_THREADS=%r", cap)
    return n


def parallel_map(fun, items):
    """
    Maps fun over items on a thread pool.  Results come back in the
    order of items, so the output never depends on scheduling.
    """
    items = list(items)
    workers = min(max_workers(), max(1, len(items)))
    if workers == 1:
        return [fun(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fun, items))
