"""DIMACS edge-format I/O with a label sidecar.

The DIMACS file carries the structure ("p edge n m", then "e u v" 1-based);
the sidecar carries one "index<TAB>label" line per vertex so structured labels
survive a round trip.
"""

import hashlib
import logging
from pathlib import Path

from ..errors import InputError
from .graph import Graph
from .labels import Base, VertexLabel, format_label, parse_label

logger = logging.getLogger(__name__)

LABEL_SUFFIX = ".labels"


def sidecar_path(path: Path) -> Path:
    """Default label-map location next to a DIMACS file."""
    return path.with_name(path.name + LABEL_SUFFIX)


def dimacs_text(graph: Graph) -> str:
    """Canonical DIMACS serialization: vertex order, edges (i < j) sorted."""
    lines = [f"p edge {graph.order} {graph.size}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in graph.edge_indices())
    return "\n".join(lines) + "\n"


def label_map_text(graph: Graph) -> str:
    """Label sidecar: one "index<TAB>label" line per vertex, 1-based."""
    return "".join(f"{i + 1}\t{format_label(v)}\n" for i, v in enumerate(graph.vertices))


def canonical_hash(graph: Graph) -> str:
    """SHA-256 over the canonical DIMACS text followed by the label map."""
    digest = hashlib.sha256()
    digest.update(dimacs_text(graph).encode("utf-8"))
    digest.update(label_map_text(graph).encode("utf-8"))
    return digest.hexdigest()


def write_dimacs(graph: Graph, path: Path, labels_path: Path | None = None) -> None:
    """Write a graph and its label sidecar."""
    path = Path(path)
    path.write_text(dimacs_text(graph), encoding="utf-8")
    (labels_path or sidecar_path(path)).write_text(label_map_text(graph), encoding="utf-8")
    logger.debug(f"Wrote {graph!r} to {path}")


def parse_dimacs(text: str, source: str = "<text>") -> tuple[int, list[tuple[int, int]]]:
    """
    Parse DIMACS edge-format text.

    Args:
        text: File contents
        source: Name used in error messages

    Returns:
        Vertex count and 0-based edge list (duplicates kept)

    Raises:
        InputError: On a missing or repeated problem line, unknown line types,
            non-integer fields, out-of-range endpoints or an edge count mismatch
    """
    n: int | None = None
    m = 0
    edges: list[tuple[int, int]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if n is not None:
                raise InputError(f"{source}:{lineno}: repeated problem line")
            if len(tokens) != 4 or tokens[1].lower() != "edge":
                raise InputError(f"{source}:{lineno}: unknown problem instance: {line}")
            try:
                n, m = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise InputError(f"{source}:{lineno}: non-integer counts in problem line: {line}") from None
            if n < 0 or m < 0:
                raise InputError(f"{source}:{lineno}: negative counts in problem line: {line}")
        elif tokens[0] == "e":
            if n is None:
                raise InputError(f"{source}:{lineno}: edge before problem line")
            if len(tokens) != 3:
                raise InputError(f"{source}:{lineno}: malformed edge line: {line}")
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise InputError(f"{source}:{lineno}: non-integer endpoint: {line}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise InputError(f"{source}:{lineno}: endpoint outside 1..{n}: {line}")
            edges.append((u - 1, v - 1))
        else:
            raise InputError(f"{source}:{lineno}: unknown line format: {line}")

    if n is None:
        raise InputError(f"{source}: missing problem line")
    if len(edges) != m:
        raise InputError(f"{source}: problem line declares {m} edges, found {len(edges)}")
    return n, edges


def parse_label_map(text: str, n: int, source: str = "<labels>") -> list[VertexLabel]:
    """Parse a label sidecar covering vertices 1..n exactly once."""
    labels: dict[int, VertexLabel] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        try:
            index_text, label_text = raw.split("\t", 1)
            index = int(index_text)
        except ValueError:
            raise InputError(f"{source}:{lineno}: expected 'index<TAB>label'") from None
        if not 1 <= index <= n or index in labels:
            raise InputError(f"{source}:{lineno}: bad or repeated index {index}")
        labels[index] = parse_label(label_text)
    if len(labels) != n:
        raise InputError(f"{source}: labels cover {len(labels)} of {n} vertices")
    return [labels[i] for i in range(1, n + 1)]


def read_dimacs(path: Path, labels_path: Path | None = None) -> Graph:
    """
    Read a DIMACS graph, restoring labels from the sidecar when present.

    Without a sidecar, vertices are labeled Base(0..n-1).
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"Cannot read graph file {path}: {e}") from e
    n, edges = parse_dimacs(text, str(path))

    label_file = labels_path or sidecar_path(path)
    if label_file.exists():
        vertices = parse_label_map(label_file.read_text(encoding="utf-8"), n, str(label_file))
    else:
        vertices = [Base(i) for i in range(n)]

    graph = Graph.from_index_edges(vertices, edges)
    logger.debug(f"Read {graph!r} from {path}")
    return graph
