"""Complete graphs, the star-join G1 *_s G2 and the iterated tower G_n.

The star-join is built twice, independently: as the quotient of a layered
auxiliary graph on V1 x V2 x {0..s+1}, and directly from the closed-form
neighborhoods. The two constructions must agree vertex for vertex and edge for
edge.

The tower uses K_c as the second operand at every step, G_n = G_{n-1} *_{2r} K_c,
so |G_n| = (2rc+1)|G_{n-1}| + c and every clique ball has lchi_r(K_c) = c.
"""

import logging
import random
import re
from collections.abc import Iterable
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from ..errors import InputError, PreconditionError, UnsupportedParameterError
from .graph import Graph
from .labels import Base, Left, Mid, Right, VertexLabel, format_label

logger = logging.getLogger(__name__)


class TowerParams(BaseModel):
    """Parameters of the tower G_n: height n, clique size c, locality radius r."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1, description="Tower height")
    c: int = Field(ge=3, description="Clique size and local chromatic bound")
    r: int = Field(ge=1, description="Locality radius")

    @classmethod
    def checked(cls, n: int, c: int, r: int) -> "TowerParams":
        """Construct, reporting invalid values as an InputError."""
        try:
            return cls(n=n, c=c, r=r)
        except ValidationError as e:
            problem = e.errors()[0]
            raise InputError(f"Invalid tower parameter {problem['loc'][0]}: {problem['msg']}") from e

    @property
    def chromatic_lower_bound(self) -> int:
        """The bound n(c-1)+1 the tower is claimed to reach."""
        return self.n * (self.c - 1) + 1

    @property
    def sphere_dimension(self) -> int:
        """Dimension n(c-1)-1 of the sphere N(G_n) is claimed to be."""
        return self.n * (self.c - 1) - 1


# Primitive graphs


def complete_graph(c: int) -> Graph:
    """K_c on Base(0..c-1)."""
    if c < 1:
        raise InputError(f"Complete graph needs at least one vertex, got {c}")
    pairs = ((i, j) for i in range(c) for j in range(i + 1, c))
    return Graph.from_index_edges((Base(i) for i in range(c)), pairs)


def cycle_graph(n: int) -> Graph:
    """C_n on Base(0..n-1)."""
    if n < 3:
        raise InputError(f"Cycle needs at least three vertices, got {n}")
    return Graph.from_index_edges((Base(i) for i in range(n)), ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    """The path on n vertices Base(0..n-1)."""
    if n < 1:
        raise InputError(f"Path needs at least one vertex, got {n}")
    return Graph.from_index_edges((Base(i) for i in range(n)), ((i, i + 1) for i in range(n - 1)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves}: center Base(0), leaves Base(1..leaves)."""
    if leaves < 1:
        raise InputError(f"Star needs at least one leaf, got {leaves}")
    return Graph.from_index_edges((Base(i) for i in range(leaves + 1)), ((0, i) for i in range(1, leaves + 1)))


_GRAPH_SPEC = re.compile(r"^([KCPS])(\d+)$")
_TOWER_SPEC = re.compile(r"^tower:(\d+),(\d+),(\d+)$")


def graph_from_spec(spec: str) -> Graph:
    """
    Resolve a graph reference used on the command line and in suite configs.

    Args:
        spec: "K4", "C5", "P3", "S3" (star with 3 leaves), "tower:n,c,r" or a
            DIMACS file path

    Returns:
        The referenced graph
    """
    match = _GRAPH_SPEC.match(spec.strip())
    if match:
        family, size = match.group(1), int(match.group(2))
        builders = {"K": complete_graph, "C": cycle_graph, "P": path_graph, "S": star_graph}
        return builders[family](size)
    tower_match = _TOWER_SPEC.match(spec.strip())
    if tower_match:
        n, c, r = (int(x) for x in tower_match.groups())
        return tower(TowerParams.checked(n, c, r))

    from .dimacs import read_dimacs

    path = Path(spec)
    if not path.exists():
        raise InputError(f"Unknown graph reference {spec!r} (not a family name or a file)")
    return read_dimacs(path)


def random_connected_graph(rng: random.Random, n: int, edge_probability: float = 0.5) -> Graph:
    """
    Random connected graph on Base(0..n-1), hence without isolated vertices.

    A random spanning tree guarantees connectivity; every other pair is added
    independently with the given probability.
    """
    if n < 2:
        raise InputError(f"A graph without isolated vertices needs two vertices, got {n}")
    order = list(range(n))
    rng.shuffle(order)
    pairs: set[tuple[int, int]] = set()
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        pairs.add((min(u, v), max(u, v)))
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < edge_probability:
                pairs.add((i, j))
    return Graph.from_index_edges((Base(i) for i in range(n)), sorted(pairs))


# Star-join


def _require_no_isolated(graph: Graph, name: str) -> None:
    isolated = graph.isolated_vertices()
    if isolated:
        raise PreconditionError(
            f"{name} has isolated vertices: {[format_label(v) for v in isolated[:5]]}"
        )


def star_join_vertices(g1: Graph, g2: Graph, s: int) -> list[VertexLabel]:
    """Canonical vertex order: Left(g1)..., Mid level 1..s (g1-major), Right(g2)..."""
    vertices: list[VertexLabel] = [Left(a) for a in g1.vertices]
    vertices.extend(Mid(a, b, i) for i in range(1, s + 1) for a in g1.vertices for b in g2.vertices)
    vertices.extend(Right(b) for b in g2.vertices)
    return vertices


def star_join_quotient(g1: Graph, g2: Graph, s: int) -> Graph:
    """
    Build G1 *_s G2 by collapsing levels 0 and s+1 of the layered auxiliary graph.

    The auxiliary graph has vertices (g1, g2, i) for 0 <= i <= s+1 and an edge
    whenever both coordinates are adjacent and the levels differ by at most
    one. Level-0 vertices sharing g1 collapse to Left(g1) and level-(s+1)
    vertices sharing g2 collapse to Right(g2). Loops and repeated edges from
    the merge are dropped.

    Args:
        g1: First operand, no isolated vertices
        g2: Second operand, no isolated vertices
        s: Number of middle levels, s >= 0

    Returns:
        The merged graph with s|V1||V2| + |V1| + |V2| vertices
    """
    if s < 0:
        raise InputError(f"Star-join parameter must be nonnegative, got {s}")
    _require_no_isolated(g1, "G1")
    _require_no_isolated(g2, "G2")

    n1, n2 = g1.order, g2.order
    last = s + 1

    def merged(a: int, b: int, level: int) -> int:
        if level == 0:
            return a
        if level == last:
            return n1 + s * n1 * n2 + b
        return n1 + (level - 1) * n1 * n2 + a * n2 + b

    arcs1 = [(a, a2) for a in range(n1) for a2 in g1.neighbor_indices(a)]
    arcs2 = [(b, b2) for b in range(n2) for b2 in g2.neighbor_indices(b)]
    level_steps = [(i, j) for i in range(last + 1) for j in (i - 1, i, i + 1) if 0 <= j <= last]

    pairs: set[tuple[int, int]] = set()
    for a, a2 in arcs1:
        for b, b2 in arcs2:
            for i, j in level_steps:
                u, v = merged(a, b, i), merged(a2, b2, j)
                if u < v:
                    pairs.add((u, v))

    graph = Graph.from_index_edges(star_join_vertices(g1, g2, s), pairs)
    logger.debug(f"Star-join quotient s={s}: {g1!r} * {g2!r} -> {graph!r}")
    return graph


def closed_form_neighborhoods(g1: Graph, g2: Graph, s: int) -> dict[VertexLabel, frozenset[VertexLabel]]:
    """
    The five neighborhood families of G1 *_s G2 written out in closed form (s >= 2).

        N(g1,0)      = N1(g1)x{0}      u  N1(g1) x V2 x {1}
        N(g1,g2,1)   = N1(g1)x{0}      u  N1(g1) x N2(g2) x {1,2}
        N(g1,g2,i)   = N1(g1) x N2(g2) x {i-1,i,i+1}            1 < i < s
        N(g1,g2,s)   = N2(g2)x{s+1}    u  N1(g1) x N2(g2) x {s-1,s}
        N(g2,s+1)    = N2(g2)x{s+1}    u  V1 x N2(g2) x {s}
    """
    if s < 2:
        raise UnsupportedParameterError(
            f"Closed-form star-join neighborhoods need s >= 2, got {s}; use star_join_quotient"
        )
    _require_no_isolated(g1, "G1")
    _require_no_isolated(g2, "G2")

    n1 = {a: g1.neighbor_set(a) for a in g1.vertices}
    n2 = {b: g2.neighbor_set(b) for b in g2.vertices}

    def product(first: Iterable[VertexLabel], second: Iterable[VertexLabel], levels: Iterable[int]) -> set[VertexLabel]:
        second = list(second)
        return {Mid(a, b, i) for i in levels for a in first for b in second}

    neighborhoods: dict[VertexLabel, frozenset[VertexLabel]] = {}
    for a in g1.vertices:
        neighborhoods[Left(a)] = frozenset({Left(x) for x in n1[a]} | product(n1[a], g2.vertices, [1]))
    for i in range(1, s + 1):
        for a in g1.vertices:
            for b in g2.vertices:
                if i == 1:
                    family = {Left(x) for x in n1[a]} | product(n1[a], n2[b], [1, 2])
                elif i == s:
                    family = {Right(y) for y in n2[b]} | product(n1[a], n2[b], [s - 1, s])
                else:
                    family = product(n1[a], n2[b], [i - 1, i, i + 1])
                neighborhoods[Mid(a, b, i)] = frozenset(family)
    for b in g2.vertices:
        neighborhoods[Right(b)] = frozenset({Right(y) for y in n2[b]} | product(g1.vertices, n2[b], [s]))
    return neighborhoods


def star_join_direct(g1: Graph, g2: Graph, s: int) -> Graph:
    """
    Build G1 *_s G2 (s >= 2) from the closed-form neighborhoods alone.

    Raises:
        UnsupportedParameterError: For s < 2, where the closed forms differ
        InputError: If the closed-form neighborhoods are not symmetric
    """
    neighborhoods = closed_form_neighborhoods(g1, g2, s)
    vertices = star_join_vertices(g1, g2, s)
    index = {v: i for i, v in enumerate(vertices)}

    pairs = set()
    for v, family in neighborhoods.items():
        u = index[v]
        for w in family:
            pairs.add((u, index[w]))
    asymmetric = [(u, w) for u, w in pairs if (w, u) not in pairs]
    if asymmetric:
        u, w = asymmetric[0]
        raise InputError(
            f"Closed-form neighborhoods are not symmetric at "
            f"{format_label(vertices[u])} -> {format_label(vertices[w])}"
        )
    return Graph.from_index_edges(vertices, ((u, w) for u, w in pairs if u < w))


def left_labels(g1: Graph) -> list[VertexLabel]:
    """The merged level-0 vertices of G1 *_s G2."""
    return [Left(a) for a in g1.vertices]


def right_labels(g2: Graph) -> list[VertexLabel]:
    """The merged last-level vertices of G1 *_s G2."""
    return [Right(b) for b in g2.vertices]


def project_first(label: VertexLabel) -> VertexLabel | None:
    """pr_{V1}: Left(a) and Mid(a, b, i) map to a; Right has no image."""
    match label:
        case Left(a) | Mid(a, _, _):
            return a
    return None


def project_second(label: VertexLabel) -> VertexLabel | None:
    """pr_{V2}: Right(b) and Mid(a, b, i) map to b; Left has no image."""
    match label:
        case Right(b) | Mid(_, b, _):
            return b
    return None


# Tower


def expected_tower_order(params: TowerParams) -> int:
    """|V(G_n)| = ((2rc+1)^n - 1) / (2r), in exact integer arithmetic."""
    numerator = (2 * params.r * params.c + 1) ** params.n - 1
    quotient, remainder = divmod(numerator, 2 * params.r)
    if remainder:
        raise ArithmeticError(f"Tower order formula is not integral for {params}")
    return quotient


def tower_levels(params: TowerParams) -> list[Graph]:
    """[G_1, ..., G_n] with G_1 = K_c and G_k = G_{k-1} *_{2r} K_c."""
    clique = complete_graph(params.c)
    levels = [clique]
    for level in range(2, params.n + 1):
        levels.append(star_join_quotient(levels[-1], clique, 2 * params.r))
        logger.info(f"Tower level {level}/{params.n} (c={params.c}, r={params.r}): {levels[-1]!r}")
    return levels


def tower(params: TowerParams) -> Graph:
    """The tower G_n."""
    return tower_levels(params)[-1]
