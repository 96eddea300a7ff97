"""Simplicial complexes, neighborhood complexes and reduced homology."""

from .complex_io import read_complex, write_complex
from .complexes import (
    FVector,
    SimplicialComplex,
    estimate_face_count,
    euler_characteristic,
    f_vector,
    join_complex,
    neighborhood_complex,
    neighborhood_generators,
)
from .fields import FieldKind, FieldSpec
from .homology import (
    BettiVector,
    boundary_matrix,
    chain_complex_defect,
    is_homology_sphere,
    lovasz_evidence,
    reduced_betti,
)

__all__ = [
    "BettiVector",
    "FVector",
    "FieldKind",
    "FieldSpec",
    "SimplicialComplex",
    "boundary_matrix",
    "chain_complex_defect",
    "estimate_face_count",
    "euler_characteristic",
    "f_vector",
    "is_homology_sphere",
    "join_complex",
    "lovasz_evidence",
    "neighborhood_complex",
    "neighborhood_generators",
    "read_complex",
    "reduced_betti",
    "write_complex",
]
