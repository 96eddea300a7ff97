"""r-local chromatic number and the consistency checker for the KST upper bound.

The r-local chromatic number lchi_r(G) is the largest chromatic number of a
radius-r ball U_r(v, G). The KST theorem bounds chi(G) <= n(c-1)+1 for graphs
with lchi_r(G) <= c and |V| <= floor(r/(2n))^n; kst_check tests that
implication on concrete graphs and never runs the theorem's own procedure.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any

from ..errors import InputError
from ..graph.graph import Graph
from ..graph.labels import VertexLabel, format_label
from .solver import (
    BudgetMeter,
    Colorability,
    ColoringStatus,
    DsaturSolver,
    SearchBudget,
    greedy_bound,
    solve_chromatic,
)

logger = logging.getLogger(__name__)


@dataclass
class LocalChromaticResult:
    """
    Outcome of local_chromatic.

    lower and upper bracket lchi_r; the status is EXACT iff they meet.
    worst_center is the center of a ball attaining the lower bound.
    """

    status: ColoringStatus
    lower: int
    upper: int
    radius: int
    distinct_balls: int
    solved_balls: int
    worst_center: VertexLabel | None = None
    nodes_explored: int = 0
    budget_used: int = 0

    @property
    def value(self) -> int | None:
        return self.lower if self.status is ColoringStatus.EXACT else None

    def to_dict(self) -> dict[str, Any]:
        return {
            "status": self.status.value,
            "lower": self.lower,
            "upper": self.upper,
            "radius": self.radius,
            "distinct_balls": self.distinct_balls,
            "solved_balls": self.solved_balls,
            "worst_center": format_label(self.worst_center) if self.worst_center is not None else None,
            "nodes_explored": self.nodes_explored,
        }


def local_chromatic(graph: Graph, r: int, budget: SearchBudget | None = None) -> LocalChromaticResult:
    """
    Compute lchi_r(G) = max over v of chi(ball(G, v, r)).

    Balls with equal vertex sets are solved once. Balls are visited largest
    first; a ball whose greedy bound cannot exceed the running maximum is
    skipped, which leaves the maximum exact. One budget covers every ball.

    Args:
        graph: Any graph
        r: Radius, r >= 1
        budget: Shared search budget (defaults to the configured one)

    Returns:
        Bounds on lchi_r with the number of distinct and solved balls
    """
    if r < 1:
        raise InputError(f"Local chromatic radius must be at least 1, got {r}")
    meter = BudgetMeter(budget or SearchBudget.from_settings())

    centers: dict[frozenset[int], int] = {}
    for v in range(graph.order):
        centers.setdefault(graph.ball_indices(v, r), v)
    balls = sorted(centers.items(), key=lambda item: (-len(item[0]), item[1]))
    logger.debug(f"lchi_{r} of {graph!r}: {len(balls)} distinct balls of {graph.order}")

    lower, upper, solved, nodes = 0, 0, 0, 0
    worst: int | None = None
    for members, center in balls:
        ball = graph.induced_subgraph_indices(members)
        greedy = greedy_bound(ball)
        if greedy <= lower:
            continue
        result = solve_chromatic(ball, meter)
        solved += 1
        nodes += result.nodes_explored
        if result.lower > lower:
            lower, worst = result.lower, center
        upper = max(upper, result.upper)
        if result.status is not ColoringStatus.EXACT:
            logger.warning(
                f"Ball around {format_label(graph.label_of(center))} unresolved: "
                f"{result.lower} <= chi <= {result.upper}"
            )
    upper = max(upper, lower)

    status = ColoringStatus.EXACT if lower == upper else ColoringStatus.EXHAUSTED
    return LocalChromaticResult(
        status=status,
        lower=lower,
        upper=upper,
        radius=r,
        distinct_balls=len(balls),
        solved_balls=solved,
        worst_center=graph.label_of(worst) if worst is not None else None,
        nodes_explored=nodes,
        budget_used=meter.elapsed_ms,
    )


def kst_size_threshold(r: int, n: int) -> int:
    """floor(r / (2n))^n in exact integers; 0 whenever r < 2n."""
    if r < 1 or n < 1:
        raise InputError(f"KST threshold needs r, n >= 1, got r={r}, n={n}")
    return (r // (2 * n)) ** n


class KstVerdict(Enum):
    """Outcome of checking the KST implication on one graph."""

    CONSISTENT = "consistent"
    PREMISE_FAILS = "premise_fails"
    VIOLATION = "violation"
    UNKNOWN = "unknown"


@dataclass
class KstReport:
    """Verdict plus the quantities it was derived from."""

    verdict: KstVerdict
    order: int
    size_threshold: int
    chromatic_bound: int
    reason: str
    local: LocalChromaticResult | None = None
    colorability: Colorability | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict.value,
            "order": self.order,
            "size_threshold": self.size_threshold,
            "chromatic_bound": self.chromatic_bound,
            "reason": self.reason,
            "local": self.local.to_dict() if self.local else None,
            "colorability": self.colorability.value if self.colorability else None,
        }


def kst_check(graph: Graph, r: int, n: int, c: int, budget: SearchBudget | None = None) -> KstReport:
    """
    Check "lchi_r(G) <= c and |V| <= floor(r/(2n))^n imply chi(G) <= n(c-1)+1".

    The size premise is tested first since it costs nothing and fails for
    every nonempty graph once r < 2n. A violation would contradict the
    theorem and points at a bug in this package.
    """
    if c < 1:
        raise InputError(f"KST check needs c >= 1, got {c}")
    threshold = kst_size_threshold(r, n)
    bound = n * (c - 1) + 1

    def report(verdict: KstVerdict, reason: str, **extra: Any) -> KstReport:
        logger.info(f"KST check (r={r}, n={n}, c={c}) on {graph!r}: {verdict.value} ({reason})")
        return KstReport(verdict, graph.order, threshold, bound, reason, **extra)

    if graph.order > threshold:
        return report(KstVerdict.PREMISE_FAILS, f"|V| = {graph.order} > {threshold}")

    local = local_chromatic(graph, r, budget)
    if local.lower > c:
        return report(KstVerdict.PREMISE_FAILS, f"lchi_{r} >= {local.lower} > {c}", local=local)
    if local.upper > c:
        return report(KstVerdict.UNKNOWN, f"lchi_{r} in [{local.lower}, {local.upper}] undecided against {c}", local=local)

    if greedy_bound(graph) <= bound:
        return report(KstVerdict.CONSISTENT, f"greedy coloring uses at most {bound} colors", local=local)

    meter = BudgetMeter(budget or SearchBudget.from_settings())
    answer = DsaturSolver(graph, meter).solve(bound)
    if answer.status is Colorability.YES:
        return report(KstVerdict.CONSISTENT, f"chi <= {bound}", local=local, colorability=answer.status)
    if answer.status is Colorability.NO:
        logger.error(f"KST bound violated on {graph!r}: chi > {bound} with both premises holding")
        return report(KstVerdict.VIOLATION, f"chi > {bound}", local=local, colorability=answer.status)
    return report(KstVerdict.UNKNOWN, f"{bound}-colorability undecided within budget", local=local, colorability=answer.status)
