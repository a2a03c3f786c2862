"""Thread pool sizing."""
from __future__ import annotations

import os

ENV_THREADS = "FAIRBOUND_THREADS"
DEFAULT_WORKERS = 8


def worker_count() -> int:
    """Number of worker threads, capped by ``FAIRBOUND_THREADS`` when set."""

    default = min(DEFAULT_WORKERS, os.cpu_count() or 1)
    raw = os.environ.get(ENV_THREADS, "").strip()
    if not raw:
        return default
    try:
        cap = int(raw)
    except ValueError:
        return default
    return max(1, cap)
