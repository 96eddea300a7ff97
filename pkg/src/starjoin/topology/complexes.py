"""Finite abstract simplicial complexes stored by their maximal faces.

A complex is a universe of vertex labels plus an antichain of maximal faces;
a vertex set is a face iff some maximal face contains it. The empty face is
always present, so the empty complex has an empty universe and the single
maximal face (). Faces are handled internally as sorted tuples of universe
indices, which makes the canonical face order plain tuple order.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations
from math import comb

from ..config import settings
from ..errors import InputError, PreconditionError, ResourceError
from ..graph.graph import Graph
from ..graph.labels import Tagged, VertexLabel, format_label
from ..verify.metrics import FACES_ENUMERATED

logger = logging.getLogger(__name__)

type Face = tuple[int, ...]


def _mask(face: Iterable[int]) -> int:
    bits = 0
    for v in face:
        bits |= 1 << v
    return bits


def _antichain(faces: Iterable[Face]) -> tuple[Face, ...]:
    """Containment-maximal members of a face family, deduplicated, in canonical order."""
    unique = {tuple(sorted(f)) for f in faces}
    by_size = sorted(unique, key=lambda f: (-len(f), f))
    kept: list[Face] = []
    kept_masks: list[int] = []
    for face in by_size:
        bits = _mask(face)
        if any(bits & other == bits for other in kept_masks):
            continue
        kept.append(face)
        kept_masks.append(bits)
    return tuple(sorted(kept))


class SimplicialComplex:
    """
    An abstract simplicial complex given by its maximal faces.

    Invariants: the maximal faces form an antichain, and every universe vertex
    lies in at least one of them.
    """

    def __init__(
        self,
        universe: Iterable[VertexLabel],
        maximal_faces: Iterable[Iterable[VertexLabel]],
    ):
        """
        Build a complex from labeled faces.

        Args:
            universe: Vertex labels in canonical order
            maximal_faces: Generating faces; non-maximal and repeated ones are dropped

        Raises:
            InputError: On duplicate or unknown labels, or uncovered universe vertices
        """
        labels = tuple(universe)
        index = {v: i for i, v in enumerate(labels)}
        if len(index) != len(labels):
            raise InputError("Duplicate vertices in complex universe")
        faces = []
        for face in maximal_faces:
            try:
                faces.append(tuple(index[v] for v in face))
            except KeyError as e:
                raise InputError(f"Face vertex {format_label(e.args[0])} is not in the universe") from None
        self._init(labels, faces)

    @classmethod
    def from_index_faces(cls, universe: Iterable[VertexLabel], faces: Iterable[Face]) -> "SimplicialComplex":
        """Build from universe-index faces (the constructors' fast path)."""
        complex_ = cls.__new__(cls)
        complex_._init(tuple(universe), list(faces))
        return complex_

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        """The complex with no vertices and only the empty face."""
        return cls.from_index_faces((), [()])

    def _init(self, universe: tuple[VertexLabel, ...], faces: list[Face]) -> None:
        self._universe = universe
        self._index = {v: i for i, v in enumerate(universe)}
        if len(self._index) != len(universe):
            raise InputError("Duplicate vertices in complex universe")
        for face in faces:
            if len(set(face)) != len(face):
                raise InputError(f"Face {face} repeats a vertex")
            if any(not 0 <= v < len(universe) for v in face):
                raise InputError(f"Face {face} leaves the universe")
        self._maximal = _antichain(faces or [()])
        covered: set[int] = set().union(*self._maximal)
        if len(covered) != len(universe):
            missing = [format_label(universe[i]) for i in range(len(universe)) if i not in covered]
            raise InputError(f"Universe vertices in no face: {missing[:5]}")

    # Accessors

    @property
    def universe(self) -> tuple[VertexLabel, ...]:
        return self._universe

    @property
    def maximal_index_faces(self) -> tuple[Face, ...]:
        """Maximal faces as sorted index tuples, in canonical order."""
        return self._maximal

    @property
    def maximal_faces(self) -> list[tuple[VertexLabel, ...]]:
        """Maximal faces as label tuples in universe order."""
        return [self.face_labels(f) for f in self._maximal]

    @property
    def dimension(self) -> int:
        """max |F| - 1 over maximal faces; -1 for the empty complex."""
        return max(len(f) for f in self._maximal) - 1

    def face_labels(self, face: Face) -> tuple[VertexLabel, ...]:
        return tuple(self._universe[i] for i in face)

    def index_of(self, label: VertexLabel) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InputError(f"Unknown complex vertex {format_label(label)}") from None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._universe == other._universe and self._maximal == other._maximal

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return (
            f"SimplicialComplex(vertices={len(self._universe)}, "
            f"maximal_faces={len(self._maximal)}, dim={self.dimension})"
        )

    # Face enumeration

    def index_faces_of_dim(self, k: int, cap: int | None = None) -> list[Face]:
        """
        All k-faces as index tuples in canonical order; k = -1 gives [()].

        Raises:
            ResourceError: If the number of k-faces would exceed the cap
        """
        if k < -1:
            raise InputError(f"Face dimension must be at least -1, got {k}")
        cap = settings.face_cap if cap is None else cap
        size = k + 1
        generators = [f for f in self._maximal if len(f) >= size]
        if not generators:
            return []
        estimate = sum(comb(len(f), size) for f in generators)
        if estimate > cap:
            logger.info(f"Pre-pass estimates {estimate} {k}-faces (cap {cap}); enumerating with deduplication")

        faces: set[Face] = set()
        for f in generators:
            if comb(len(f), size) > cap:
                raise ResourceError(
                    f"One maximal face alone has {comb(len(f), size)} {k}-faces, above the cap {cap}",
                    cap=cap,
                    requested=estimate,
                )
            faces.update(combinations(f, size))
            if len(faces) > cap:
                raise ResourceError(f"More than {cap} {k}-faces in {self!r}", cap=cap, requested=estimate)
        FACES_ENUMERATED.inc(len(faces))
        return sorted(faces)

    def faces_of_dim(self, k: int, cap: int | None = None) -> list[tuple[VertexLabel, ...]]:
        """All k-faces as label tuples in canonical order; empty when k > dimension."""
        return [self.face_labels(f) for f in self.index_faces_of_dim(k, cap)]


@dataclass(frozen=True)
class FVector:
    """counts[k] is the number of k-dimensional faces, k = 0..dim."""

    counts: tuple[int, ...]

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.counts))


def f_vector(complex_: SimplicialComplex, cap: int | None = None) -> FVector:
    """Face counts per dimension (empty for the empty complex)."""
    counts = tuple(len(complex_.index_faces_of_dim(k, cap)) for k in range(complex_.dimension + 1))
    return FVector(counts)


def euler_characteristic(complex_: SimplicialComplex, cap: int | None = None) -> int:
    """Alternating face count sum_k (-1)^k f_k; 0 for the empty complex."""
    return f_vector(complex_, cap).euler_characteristic


def estimate_face_count(complex_: SimplicialComplex, k: int | None = None) -> int:
    """
    Upper estimate of the face count from maximal faces alone.

    With k, the sum of C(|F|, k+1); without, the sum of 2^|F| - 1 (nonempty faces).
    """
    if k is None:
        return sum(2 ** len(f) - 1 for f in complex_.maximal_index_faces)
    return sum(comb(len(f), k + 1) for f in complex_.maximal_index_faces)


# Constructions


def neighborhood_generators(graph: Graph) -> set[frozenset[VertexLabel]]:
    """The distinct open neighborhoods N(v), before antichain reduction."""
    return {graph.neighbor_set(v) for v in graph.vertices}


def neighborhood_complex(graph: Graph) -> SimplicialComplex:
    """
    N(G): vertex sets with a common neighbor, generated by the neighborhoods N(v).

    Raises:
        PreconditionError: If G has an isolated vertex
    """
    isolated = graph.isolated_vertices()
    if isolated:
        raise PreconditionError(
            f"Neighborhood complex needs a graph without isolated vertices: "
            f"{[format_label(v) for v in isolated[:5]]}"
        )
    generators = {graph.neighbor_indices(v) for v in range(graph.order)}
    complex_ = SimplicialComplex.from_index_faces(graph.vertices, generators)
    logger.debug(f"N({graph!r}) = {complex_!r}")
    return complex_


def join_complex(first: SimplicialComplex, second: SimplicialComplex) -> SimplicialComplex:
    """
    K * L: faces A u B with A in K and B in L on the tagged disjoint union.

    Vertices of K become Tagged(0, v) and vertices of L become Tagged(1, v).
    Unions of maximal faces are again an antichain.
    """
    offset = len(first.universe)
    universe = [Tagged(0, v) for v in first.universe] + [Tagged(1, v) for v in second.universe]
    faces = [
        a + tuple(offset + v for v in b)
        for a in first.maximal_index_faces
        for b in second.maximal_index_faces
    ]
    return SimplicialComplex.from_index_faces(universe, faces)
