"""Reduced simplicial homology over a field and homology-sphere evidence.

The chain complex is augmented: C_{-1} is spanned by the empty face and
d_0 sends every vertex to it with coefficient +1. Then, with f_k the number of
k-faces and rank d_{dim+1} = 0,

    reduced betti_k = f_k - rank d_k - rank d_{k+1},    k = -1..dim.

A sphere verdict here is homology evidence only. It says nothing about
connectivity, which is what the Lovasz bound actually needs.
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np
from scipy import sparse

from ..config import settings
from ..errors import InputError, ResourceError
from .complexes import Face, SimplicialComplex
from .fields import FieldSpec
from .linalg import rank

logger = logging.getLogger(__name__)


def _boundary(rows: Sequence[Face], columns: Sequence[Face], field: FieldSpec) -> sparse.csc_matrix:
    """d mapping the column faces onto the row faces, signs (-1)^position."""
    row_index = {face: i for i, face in enumerate(rows)}
    data: list[int] = []
    indices: list[int] = []
    indptr = [0]
    for face in columns:
        for position in range(len(face)):
            data.append(-1 if position % 2 else 1)
            indices.append(row_index[face[:position] + face[position + 1:]])
        indptr.append(len(data))
    values = np.array(data, dtype=np.int64)
    if field.characteristic:
        values %= field.characteristic
    return sparse.csc_matrix(
        (values, np.array(indices, dtype=np.int64), np.array(indptr, dtype=np.int64)),
        shape=(len(rows), len(columns)),
    )


def boundary_matrix(complex_: SimplicialComplex, k: int, field: FieldSpec, cap: int | None = None) -> sparse.csc_matrix:
    """
    The boundary map d_k from k-faces (columns) to (k-1)-faces (rows).

    Entries are reduced into the field: over GF(2) every incidence is 1, over
    GF(p) a -1 becomes p-1. d_0 maps each vertex to the empty face.
    """
    if k < 0:
        raise InputError(f"Boundary dimension must be nonnegative, got {k}")
    rows = complex_.index_faces_of_dim(k - 1, cap)
    columns = complex_.index_faces_of_dim(k, cap)
    return _boundary(rows, columns, field)


def chain_complex_defect(complex_: SimplicialComplex, k: int, field: FieldSpec, cap: int | None = None) -> int:
    """Nonzero entries of d_k o d_{k+1} over the field; a chain complex has none."""
    outer = boundary_matrix(complex_, k, field, cap).astype(np.int64)
    inner = boundary_matrix(complex_, k + 1, field, cap).astype(np.int64)
    if inner.shape[0] == 0 or inner.shape[1] == 0 or outer.shape[1] == 0:
        return 0
    product = (outer @ inner).tocsc()
    if field.characteristic:
        product.data %= field.characteristic
    product.eliminate_zeros()
    return int(product.nnz)


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers; reduced[0] is dimension -1."""

    field: FieldSpec
    reduced: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        index = k + 1
        return self.reduced[index] if 0 <= index < len(self.reduced) else 0

    def nonzero(self) -> dict[int, int]:
        """Dimensions with nonzero reduced homology."""
        return {k - 1: b for k, b in enumerate(self.reduced) if b}

    def sphere_dimension(self) -> int | None:
        """d if the vector is that of a d-sphere (a single 1 in dimension d), else None."""
        support = self.nonzero()
        if len(support) == 1:
            ((d, b),) = support.items()
            if b == 1:
                return d
        return None

    def same_homology(self, other: "BettiVector") -> bool:
        """Equal reduced Betti numbers in every dimension (fields may differ)."""
        return self.nonzero() == other.nonzero()

    def to_dict(self) -> dict[str, Any]:
        return {"field": self.field.label(), "reduced_betti": {str(k): b for k, b in self.nonzero().items()}}

    def __str__(self) -> str:
        cells = " ".join(f"{k}:{b}" for k, b in enumerate(self.reduced, start=-1))
        return f"{self.field} [{cells}]"


def reduced_betti(complex_: SimplicialComplex, field: FieldSpec, cap: int | None = None) -> BettiVector:
    """
    Reduced Betti numbers in dimensions -1..dim over the field.

    Raises:
        ResourceError: If the faces of all dimensions together exceed the face cap
        RuntimeError: If a Betti number comes out negative (a rank defect)
    """
    cap = settings.face_cap if cap is None else cap
    dim = complex_.dimension
    faces: dict[int, list[Face]] = {}
    total = 0
    for k in range(-1, dim + 1):
        faces[k] = complex_.index_faces_of_dim(k, cap)
        total += len(faces[k])
        if total > cap:
            raise ResourceError(
                f"More than {cap} faces in {complex_!r} through dimension {k}", cap=cap, requested=total
            )
    ranks = {k: rank(_boundary(faces[k - 1], faces[k], field), field) for k in range(0, dim + 1)}
    ranks[-1] = 0
    ranks[dim + 1] = 0
    betti = tuple(len(faces[k]) - ranks[k] - ranks[k + 1] for k in range(-1, dim + 1))

    negative = {k: b for k, b in enumerate(betti, start=-1) if b < 0}
    if negative:
        raise RuntimeError(
            f"Negative Betti numbers {negative} for {complex_!r} over {field}: boundary ranks are inconsistent"
        )
    vector = BettiVector(field, betti)
    logger.debug(f"Reduced homology of {complex_!r}: {vector}")
    return vector


def is_homology_sphere(
    complex_: SimplicialComplex, d: int, fields: Iterable[FieldSpec], cap: int | None = None
) -> bool:
    """True iff over every field the reduced Betti numbers are those of S^d."""
    if d < -1:
        raise InputError(f"Sphere dimension must be at least -1, got {d}")
    fields = list(fields)
    if not fields:
        raise InputError("is_homology_sphere needs at least one field")
    return all(reduced_betti(complex_, field, cap).sphere_dimension() == d for field in fields)


def lovasz_evidence(betti: BettiVector) -> int | None:
    """
    The chromatic bound d+2 that a homology d-sphere would imply through the
    Lovasz bound if it were also (d-1)-connected; None for non-spheres.

    Evidence only: homology cannot certify connectivity.
    """
    d = betti.sphere_dimension()
    if d is None:
        return None
    return d + 2


def default_fields() -> list[FieldSpec]:
    """GF(2) and Q, the pair deep checks run over."""
    return [FieldSpec.gf2(), FieldSpec.rationals()]

