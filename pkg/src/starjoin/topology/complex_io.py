"""Text format for complexes.

    universe: <label> <label> ...
    <label> <label> ...          one maximal face per line

Labels use the whitespace-free label grammar. Blank lines and lines starting
with "#" are ignored. A file with an empty universe and no face lines is the
empty complex.
"""

import logging
from pathlib import Path

from ..errors import InputError
from ..graph.labels import format_label, parse_label
from .complexes import SimplicialComplex

logger = logging.getLogger(__name__)

_HEADER = "universe:"


def complex_text(complex_: SimplicialComplex) -> str:
    lines = [" ".join([_HEADER, *(format_label(v) for v in complex_.universe)])]
    if complex_.universe:
        lines.extend(" ".join(format_label(v) for v in face) for face in complex_.maximal_faces)
    return "\n".join(lines) + "\n"


def parse_complex(text: str, source: str = "<complex>") -> SimplicialComplex:
    """Parse the complex text format."""
    lines = [
        (lineno, line.strip())
        for lineno, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.strip().startswith("#")
    ]
    if not lines or not lines[0][1].startswith(_HEADER):
        raise InputError(f"{source}: first line must start with {_HEADER!r}")

    try:
        universe = [parse_label(tok) for tok in lines[0][1][len(_HEADER):].split()]
        faces = [[parse_label(tok) for tok in line.split()] for _, line in lines[1:]]
    except InputError as e:
        raise InputError(f"{source}: {e}") from e
    if universe and not faces:
        raise InputError(f"{source}: nonempty universe without faces")
    return SimplicialComplex(universe, faces)


def write_complex(complex_: SimplicialComplex, path: Path) -> None:
    Path(path).write_text(complex_text(complex_), encoding="utf-8")
    logger.debug(f"Wrote {complex_!r} to {path}")


def read_complex(path: Path) -> SimplicialComplex:
    """Read a complex file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"Cannot read complex file {path}: {e}") from e
    return parse_complex(text, str(path))
