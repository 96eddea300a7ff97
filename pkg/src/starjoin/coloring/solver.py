"""Exact graph coloring: DSATUR branch-and-bound with budgets and witnesses."""

import logging
import time
from dataclasses import dataclass
from enum import Enum
from typing import Any

from ..config import settings
from ..graph.graph import Graph
from ..graph.labels import VertexLabel, format_label
from ..verify.metrics import SEARCH_NODES

logger = logging.getLogger(__name__)

_CLOCK_CHECK_INTERVAL = 1024


@dataclass(frozen=True)
class SearchBudget:
    """Limits for one exact computation; None means unlimited."""

    max_nodes: int | None = None
    max_seconds: float | None = None

    @classmethod
    def from_settings(cls) -> "SearchBudget":
        """Budget configured through STARJOIN_MAX_NODES / STARJOIN_MAX_SECONDS."""
        return cls(max_nodes=settings.max_nodes, max_seconds=settings.max_seconds)

    @classmethod
    def unlimited(cls) -> "SearchBudget":
        return cls()

    def to_dict(self) -> dict[str, Any]:
        return {"max_nodes": self.max_nodes, "max_seconds": self.max_seconds}


class BudgetMeter:
    """Shared node and time accounting across the queries of one computation."""

    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.nodes = 0
        self.started = time.monotonic()
        self.exhausted = False

    def charge(self) -> bool:
        """Count one search node; False once the budget is spent."""
        self.nodes += 1
        limit = self.budget.max_nodes
        if limit is not None and self.nodes > limit:
            self.exhausted = True
        elif self.budget.max_seconds is not None and self.nodes % _CLOCK_CHECK_INTERVAL == 0:
            if time.monotonic() - self.started > self.budget.max_seconds:
                self.exhausted = True
        return not self.exhausted

    @property
    def elapsed_ms(self) -> int:
        return int((time.monotonic() - self.started) * 1000)


class Colorability(Enum):
    """Answer of a k-colorability query."""

    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass
class KColoringResult:
    """Outcome of is_k_colorable; witness present exactly for YES."""

    status: Colorability
    k: int
    witness: dict[VertexLabel, int] | None = None
    nodes_explored: int = 0


class ColoringStatus(Enum):
    """Certainty of a chromatic-number computation."""

    EXACT = "exact"
    LOWER_ONLY = "lower_only"
    EXHAUSTED = "exhausted"


@dataclass
class ColoringResult:
    """
    Chromatic number outcome.

    EXACT: lower == upper == chi, witness is a proper chi-coloring and every
        smaller k was refuted by complete search.
    LOWER_ONLY: the budget ran out after at least one refutation raised the
        lower bound past the clique bound.
    EXHAUSTED: the budget ran out with only heuristic bounds.
    """

    status: ColoringStatus
    lower: int
    upper: int
    witness: dict[VertexLabel, int] | None = None
    nodes_explored: int = 0
    budget_used: int = 0  # milliseconds of wall time

    @property
    def chi(self) -> int | None:
        return self.lower if self.status is ColoringStatus.EXACT else None

    def to_dict(self) -> dict[str, Any]:
        return {
            "status": self.status.value,
            "lower": self.lower,
            "upper": self.upper,
            "nodes_explored": self.nodes_explored,
        }


# Heuristic bounds


def degeneracy_order(graph: Graph) -> list[int]:
    """Smallest-last order: repeatedly remove a minimum-degree vertex, then reverse."""
    degree = [len(graph.neighbor_indices(v)) for v in range(graph.order)]
    removed = [False] * graph.order
    buckets: dict[int, set[int]] = {}
    for v, d in enumerate(degree):
        buckets.setdefault(d, set()).add(v)

    removal: list[int] = []
    current = 0
    for _ in range(graph.order):
        current = max(0, current - 1)
        while not buckets.get(current):
            current += 1
        v = min(buckets[current])
        buckets[current].discard(v)
        removed[v] = True
        removal.append(v)
        for w in graph.neighbor_indices(v):
            if not removed[w]:
                buckets[degree[w]].discard(w)
                degree[w] -= 1
                buckets.setdefault(degree[w], set()).add(w)
    removal.reverse()
    return removal


def _greedy_indices(graph: Graph) -> list[int]:
    colors = [-1] * graph.order
    for v in degeneracy_order(graph):
        used = {colors[w] for w in graph.neighbor_indices(v)}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return colors


def greedy_coloring(graph: Graph) -> dict[VertexLabel, int]:
    """Proper coloring by first-fit along the degeneracy order."""
    return {graph.label_of(v): c for v, c in enumerate(_greedy_indices(graph))}


def greedy_bound(graph: Graph) -> int:
    """Colors used by the degeneracy-order greedy coloring; an upper bound on chi."""
    colors = _greedy_indices(graph)
    return max(colors) + 1 if colors else 0


def _greedy_clique(graph: Graph, seed: int) -> list[int]:
    clique = [seed]
    candidates = graph.adjacency_bits(seed)
    while candidates:
        best, best_score = -1, -1
        pending = candidates
        while pending:
            low = pending & -pending
            v = low.bit_length() - 1
            pending ^= low
            score = (graph.adjacency_bits(v) & candidates).bit_count()
            if score > best_score:
                best, best_score = v, score
        clique.append(best)
        candidates &= graph.adjacency_bits(best)
    return clique


def max_clique_heuristic(graph: Graph, seeds: int | None = None) -> list[int]:
    """Largest clique found by greedy extension from the highest-degree seeds."""
    order = sorted(range(graph.order), key=lambda v: -len(graph.neighbor_indices(v)))
    if seeds is not None:
        order = order[:seeds]
    best: list[int] = []
    for seed in order:
        clique = _greedy_clique(graph, seed)
        if len(clique) > len(best):
            best = clique
    return best


def clique_lower_bound(graph: Graph) -> int:
    """Size of a heuristically found clique; a lower bound on chi."""
    return len(max_clique_heuristic(graph))


# Exact search


def verify_coloring(graph: Graph, coloring: dict[VertexLabel, int]) -> list[tuple[VertexLabel, VertexLabel]]:
    """Edges whose endpoints share a color (empty for a proper coloring)."""
    missing = [v for v in graph.vertices if v not in coloring]
    if missing:
        raise RuntimeError(f"Coloring leaves {len(missing)} vertices uncolored")
    return [(u, v) for u, v in graph.edges() if coloring[u] == coloring[v]]


class DsaturSolver:
    """
    Decides k-colorability by DSATUR-ordered backtracking.

    The vertex with the most distinct neighbor colors is branched on first
    (ties: larger degree). A new color may only be the smallest unused index,
    and a heuristic clique is precolored 0..q-1, so color permutations are
    never revisited. All search state belongs to one solver instance.
    """

    def __init__(self, graph: Graph, meter: BudgetMeter):
        self.graph = graph
        self.meter = meter
        self.n = graph.order
        self.degree = [len(graph.neighbor_indices(v)) for v in range(self.n)]

    def solve(self, k: int) -> KColoringResult:
        """Find a proper k-coloring, refute it, or run out of budget."""
        graph = self.graph
        start_nodes = self.meter.nodes
        if self.n == 0:
            return KColoringResult(Colorability.YES, k, {}, 0)
        if k <= 0:
            return KColoringResult(Colorability.NO, k, None, 0)
        palette = min(k, self.n)

        clique = max_clique_heuristic(graph, seeds=min(self.n, 16))
        if len(clique) > palette:
            logger.debug(f"Clique of size {len(clique)} refutes {k}-colorability")
            return KColoringResult(Colorability.NO, k, None, 0)

        colors = [-1] * self.n
        counts = [[0] * palette for _ in range(self.n)]
        saturation = [0] * self.n
        uncolored = set(range(self.n))

        def assign(v: int, c: int) -> None:
            colors[v] = c
            uncolored.discard(v)
            for w in graph.neighbor_indices(v):
                row = counts[w]
                if row[c] == 0:
                    saturation[w] += 1
                row[c] += 1

        def unassign(v: int) -> None:
            c = colors[v]
            colors[v] = -1
            uncolored.add(v)
            for w in graph.neighbor_indices(v):
                row = counts[w]
                row[c] -= 1
                if row[c] == 0:
                    saturation[w] -= 1

        def select() -> int:
            return max(uncolored, key=lambda v: (saturation[v], self.degree[v], -v))

        for c, v in enumerate(clique):
            assign(v, c)
        used = len(clique)

        if not uncolored:
            return self._yes(k, colors, start_nodes)

        # Frames: [vertex, next color to try, colors in use before this vertex]
        stack: list[list[int]] = [[select(), 0, used]]
        while stack:
            frame = stack[-1]
            v, c, used_before = frame
            if colors[v] != -1:
                unassign(v)
            used = used_before

            limit = min(palette, used + 1)
            row = counts[v]
            while c < limit and row[c]:
                c += 1
            if c >= limit:
                stack.pop()
                continue

            frame[1] = c + 1
            assign(v, c)
            used = max(used, c + 1)
            if not self.meter.charge():
                SEARCH_NODES.inc(self.meter.nodes - start_nodes)
                logger.warning(f"Budget exhausted deciding {k}-colorability after {self.meter.nodes} nodes")
                return KColoringResult(Colorability.UNKNOWN, k, None, self.meter.nodes - start_nodes)
            if not uncolored:
                return self._yes(k, colors, start_nodes)
            stack.append([select(), 0, used])

        explored = self.meter.nodes - start_nodes
        SEARCH_NODES.inc(explored)
        logger.debug(f"Refuted {k}-colorability of {graph!r} in {explored} nodes")
        return KColoringResult(Colorability.NO, k, None, explored)

    def _yes(self, k: int, colors: list[int], start_nodes: int) -> KColoringResult:
        witness = {self.graph.label_of(v): c for v, c in enumerate(colors)}
        conflicts = verify_coloring(self.graph, witness)
        if conflicts:
            u, v = conflicts[0]
            raise RuntimeError(
                f"Solver produced an improper {k}-coloring (conflict at "
                f"{format_label(u)}-{format_label(v)})"
            )
        if max(colors) >= k:
            raise RuntimeError(f"Solver used color {max(colors)} in a {k}-coloring")
        explored = self.meter.nodes - start_nodes
        SEARCH_NODES.inc(explored)
        return KColoringResult(Colorability.YES, k, witness, explored)


def is_k_colorable(graph: Graph, k: int, budget: SearchBudget | None = None) -> KColoringResult:
    """YES with a verified witness, NO on exhaustive refutation, UNKNOWN on budget exhaustion."""
    meter = BudgetMeter(budget or SearchBudget.from_settings())
    return DsaturSolver(graph, meter).solve(k)


def chromatic_number(graph: Graph, budget: SearchBudget | None = None) -> ColoringResult:
    """
    Exact chromatic number by an upward scan over k.

    The scan starts at the clique bound and stops at the greedy bound, whose
    coloring is the fallback witness; each k is decided by the DSATUR solver
    under one shared budget.
    """
    return solve_chromatic(graph, BudgetMeter(budget or SearchBudget.from_settings()))


def solve_chromatic(graph: Graph, meter: BudgetMeter) -> ColoringResult:
    """chromatic_number charged against an existing meter (shared by ball scans)."""
    witness = greedy_coloring(graph)
    lower = clique_lower_bound(graph)
    upper = max(witness.values(), default=-1) + 1
    refuted_past_clique = False
    solver = DsaturSolver(graph, meter)
    nodes = 0

    while lower < upper:
        result = solver.solve(lower)
        nodes += result.nodes_explored
        if result.status is Colorability.YES:
            upper = lower
            witness = result.witness or {}
        elif result.status is Colorability.NO:
            lower += 1
            refuted_past_clique = True
        else:
            status = ColoringStatus.LOWER_ONLY if refuted_past_clique else ColoringStatus.EXHAUSTED
            return ColoringResult(status, lower, upper, None, nodes, meter.elapsed_ms)

    return ColoringResult(ColoringStatus.EXACT, lower, upper, witness, nodes, meter.elapsed_ms)
