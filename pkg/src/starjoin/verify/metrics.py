"""Prometheus metrics for solver and verification work.

Metrics live in a private registry so that library use never touches the
global default registry; run_suite dumps it in text exposition format.
Worker processes have registries of their own, so the suite merges what
they count back into this one.
"""

import logging
from pathlib import Path

from prometheus_client import CollectorRegistry, Counter, Histogram, write_to_textfile

logger = logging.getLogger(__name__)

REGISTRY = CollectorRegistry(auto_describe=True)

SEARCH_NODES = Counter(
    "starjoin_search_nodes",
    "Search nodes explored by the exact coloring solver",
    registry=REGISTRY,
)

CHECK_SECONDS = Histogram(
    "starjoin_check_seconds",
    "Wall time of one verification check",
    ["claim", "check"],
    buckets=(0.01, 0.1, 1.0, 10.0, 60.0, 600.0, float("inf")),
    registry=REGISTRY,
)

CHECKS_TOTAL = Counter(
    "starjoin_checks",
    "Verification checks by claim and verdict",
    ["claim", "verdict"],
    registry=REGISTRY,
)

FACES_ENUMERATED = Counter(
    "starjoin_faces_enumerated",
    "Faces produced by simplicial-complex face enumeration",
    registry=REGISTRY,
)


_WORK_COUNTERS = {"starjoin_search_nodes": SEARCH_NODES, "starjoin_faces_enumerated": FACES_ENUMERATED}


def record_check(claim: str, check: str, verdict: str, seconds: float) -> None:
    CHECK_SECONDS.labels(claim=claim, check=check).observe(seconds)
    CHECKS_TOTAL.labels(claim=claim, verdict=verdict).inc()


def work_totals() -> dict[str, float]:
    """Current search-node and face counts of this process, by metric name."""
    return {name: REGISTRY.get_sample_value(f"{name}_total") or 0.0 for name in _WORK_COUNTERS}


def merge_work(increments: dict[str, float]) -> None:
    """Add work counted in a worker process to this registry."""
    for name, amount in increments.items():
        if amount > 0:
            _WORK_COUNTERS[name].inc(amount)


def write_metrics(path: Path) -> None:
    """Write the registry in Prometheus text format (the client writes atomically)."""
    path.parent.mkdir(parents=True, exist_ok=True)
    write_to_textfile(str(path), REGISTRY)
    logger.debug(f"Metrics written to {path}")
