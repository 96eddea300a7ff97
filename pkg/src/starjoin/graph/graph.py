"""Immutable simple undirected graphs with labeled vertices."""

import logging
import math
from collections import Counter, deque
from collections.abc import Callable, Iterable, Iterator, Mapping
from functools import cached_property

from ..errors import InputError
from .labels import VertexLabel, format_label

logger = logging.getLogger(__name__)

INFINITE = math.inf

type Distance = int | float


class Graph:
    """A simple undirected graph whose vertex identity is its label.

    Vertex order is the construction order and is never changed; indices are an
    internal, order-stable compression of the labels. Adjacency is kept both as
    sorted neighbor tuples (iteration) and as one packed bitset per vertex
    (constant-time edge queries).
    """

    def __init__(
        self,
        vertices: Iterable[VertexLabel],
        edges: Iterable[tuple[VertexLabel, VertexLabel]] = (),
    ):
        """
        Build a graph from labels and label pairs.

        Args:
            vertices: Vertex labels in canonical order, pairwise distinct
            edges: Unordered vertex pairs; duplicates are merged

        Raises:
            InputError: On duplicate labels, loops or edges to unknown vertices
        """
        self._vertices = tuple(vertices)
        self._index = self._build_index(self._vertices)
        pairs = ((self.index_of(u), self.index_of(v)) for u, v in edges)
        self._neighbors = self._build_neighbors(len(self._vertices), pairs)

    @classmethod
    def from_index_edges(
        cls, vertices: Iterable[VertexLabel], pairs: Iterable[tuple[int, int]]
    ) -> "Graph":
        """Build a graph from labels and index pairs (the constructors' fast path)."""
        graph = cls.__new__(cls)
        graph._vertices = tuple(vertices)
        graph._index = cls._build_index(graph._vertices)
        graph._neighbors = cls._build_neighbors(len(graph._vertices), pairs)
        return graph

    @staticmethod
    def _build_index(vertices: tuple[VertexLabel, ...]) -> dict[VertexLabel, int]:
        index = {label: i for i, label in enumerate(vertices)}
        if len(index) != len(vertices):
            duplicates = [v for v, count in Counter(vertices).items() if count > 1]
            raise InputError(f"Duplicate vertex labels: {[format_label(v) for v in duplicates[:5]]}")
        return index

    @staticmethod
    def _build_neighbors(
        n: int, pairs: Iterable[tuple[int, int]]
    ) -> tuple[tuple[int, ...], ...]:
        adjacency: list[set[int]] = [set() for _ in range(n)]
        for u, v in pairs:
            if u == v:
                raise InputError(f"Loop at vertex index {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"Edge ({u}, {v}) outside vertex range 0..{n - 1}")
            adjacency[u].add(v)
            adjacency[v].add(u)
        return tuple(tuple(sorted(nbrs)) for nbrs in adjacency)

    @cached_property
    def _adjacency_bits(self) -> list[int]:
        bits = []
        for nbrs in self._neighbors:
            mask = 0
            for v in nbrs:
                mask |= 1 << v
            bits.append(mask)
        return bits

    # Basic accessors

    @property
    def vertices(self) -> tuple[VertexLabel, ...]:
        """Vertex labels in canonical order."""
        return self._vertices

    @property
    def order(self) -> int:
        """Number of vertices."""
        return len(self._vertices)

    @cached_property
    def size(self) -> int:
        """Number of edges."""
        return sum(len(nbrs) for nbrs in self._neighbors) // 2

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def __eq__(self, other: object) -> bool:
        """Labeled-graph equality: same vertex sequence and same edges."""
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._neighbors == other._neighbors

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, size={self.size})"

    def index_of(self, label: VertexLabel) -> int:
        """Internal index of a vertex label."""
        try:
            return self._index[label]
        except KeyError:
            raise InputError(f"Unknown vertex {format_label(label)}") from None

    def label_of(self, index: int) -> VertexLabel:
        """Label of an internal index."""
        return self._vertices[index]

    def neighbor_indices(self, index: int) -> tuple[int, ...]:
        """Sorted neighbor indices of an internal index."""
        return self._neighbors[index]

    def adjacency_bits(self, index: int) -> int:
        """Packed neighbor bitset of an internal index."""
        return self._adjacency_bits[index]

    def has_edge(self, u: VertexLabel, v: VertexLabel) -> bool:
        """Check whether two vertices are adjacent."""
        return bool(self._adjacency_bits[self.index_of(u)] >> self.index_of(v) & 1)

    def edge_indices(self) -> Iterator[tuple[int, int]]:
        """Edges as index pairs (i < j) in lexicographic order."""
        for u, nbrs in enumerate(self._neighbors):
            for v in nbrs:
                if u < v:
                    yield u, v

    def edges(self) -> list[tuple[VertexLabel, VertexLabel]]:
        """Edges as label pairs, in canonical order."""
        return [(self._vertices[u], self._vertices[v]) for u, v in self.edge_indices()]

    def degree(self, v: VertexLabel) -> int:
        """Number of neighbors of a vertex."""
        return len(self._neighbors[self.index_of(v)])

    def neighbor_set(self, v: VertexLabel) -> frozenset[VertexLabel]:
        """Open neighborhood N(v); never contains v."""
        return frozenset(self._vertices[u] for u in self._neighbors[self.index_of(v)])

    # Distances and balls

    def _bfs(self, sources: Iterable[int], limit: int | None = None) -> list[int]:
        """Multi-source BFS; -1 marks unreached vertices."""
        dist = [-1] * self.order
        queue: deque[int] = deque()
        for s in sources:
            if dist[s] == -1:
                dist[s] = 0
                queue.append(s)
        while queue:
            u = queue.popleft()
            if limit is not None and dist[u] >= limit:
                continue
            for w in self._neighbors[u]:
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def distance(self, u: VertexLabel, v: VertexLabel) -> Distance:
        """Shortest-path length; INFINITE across components."""
        target = self.index_of(v)
        d = self._bfs([self.index_of(u)])[target]
        return INFINITE if d == -1 else d

    def set_distance(
        self, sources: Iterable[VertexLabel], targets: Iterable[VertexLabel]
    ) -> Distance:
        """Minimum distance between two vertex sets (0 if they meet)."""
        source_idx = [self.index_of(v) for v in sources]
        target_idx = [self.index_of(v) for v in targets]
        if not source_idx or not target_idx:
            raise InputError("set_distance needs two nonempty vertex sets")
        dist = self._bfs(source_idx)
        reached = [dist[t] for t in target_idx if dist[t] != -1]
        return min(reached) if reached else INFINITE

    def ball_indices(self, index: int, radius: int) -> frozenset[int]:
        """Indices of U_r(v) = {u : d(u, v) <= r}."""
        if radius < 0:
            raise InputError(f"Ball radius must be nonnegative, got {radius}")
        dist = self._bfs([index], limit=radius)
        return frozenset(i for i, d in enumerate(dist) if d != -1)

    def ball(self, v: VertexLabel, radius: int) -> "Graph":
        """Induced subgraph on the ball of the given radius around v."""
        return self.induced_subgraph_indices(self.ball_indices(self.index_of(v), radius))

    def induced_subgraph(self, subset: Iterable[VertexLabel]) -> "Graph":
        """Induced subgraph on a vertex subset, keeping this graph's vertex order."""
        return self.induced_subgraph_indices({self.index_of(v) for v in subset})

    def induced_subgraph_indices(self, indices: Iterable[int]) -> "Graph":
        """Induced subgraph on a set of internal indices."""
        kept = sorted(set(indices))
        position = {old: new for new, old in enumerate(kept)}
        pairs = (
            (position[u], position[w])
            for u in kept
            for w in self._neighbors[u]
            if u < w and w in position
        )
        return Graph.from_index_edges((self._vertices[i] for i in kept), pairs)

    def components(self) -> list[frozenset[VertexLabel]]:
        """Connected components, each as a label set, in order of first vertex."""
        seen = [False] * self.order
        result = []
        for start in range(self.order):
            if seen[start]:
                continue
            dist = self._bfs([start])
            members = [i for i, d in enumerate(dist) if d != -1]
            for i in members:
                seen[i] = True
            result.append(frozenset(self._vertices[i] for i in members))
        return result

    def odd_girth(self) -> Distance:
        """Length of a shortest odd cycle; INFINITE iff the graph is bipartite.

        From every root, an edge joining two vertices on the same BFS level
        closes an odd walk of length 2*level+1; the minimum over all roots is
        attained on a shortest odd cycle.
        """
        best: Distance = INFINITE
        for root in range(self.order):
            dist = self._bfs([root])
            for u, w in self.edge_indices():
                if dist[u] != -1 and dist[u] == dist[w]:
                    best = min(best, 2 * dist[u] + 1)
            if best == 3:
                break
        return best

    def isolated_vertices(self) -> list[VertexLabel]:
        """Vertices with an empty neighborhood."""
        return [self._vertices[i] for i, nbrs in enumerate(self._neighbors) if not nbrs]

    def has_isolated_vertices(self) -> bool:
        """True iff some vertex has no neighbors."""
        return any(not nbrs for nbrs in self._neighbors)

    def relabel(self, mapping: Mapping[VertexLabel, VertexLabel] | Callable[[VertexLabel], VertexLabel]) -> "Graph":
        """Same graph with every label replaced; order and edges are kept."""
        rename = mapping.__getitem__ if isinstance(mapping, Mapping) else mapping
        return Graph.from_index_edges(
            (rename(v) for v in self._vertices), self.edge_indices()
        )
