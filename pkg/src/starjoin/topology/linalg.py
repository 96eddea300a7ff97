"""Exact matrix rank over GF(2), GF(p) and Q for sparse integer matrices.

All kernels reduce columns against a pivot table keyed by the lowest nonzero
row, the standard column reduction used for boundary matrices. Input is a
scipy.sparse matrix with integer entries.
"""

import logging
from math import gcd

import numpy as np
from scipy import sparse

from .fields import FieldKind, FieldSpec

logger = logging.getLogger(__name__)

# Rational matrices with at most this many entries go through dense Bareiss
DENSE_RATIONAL_LIMIT = 40_000

type SparseColumn = dict[int, int]


def _columns(matrix: sparse.spmatrix) -> list[SparseColumn]:
    csc = sparse.csc_matrix(matrix)
    csc.sum_duplicates()
    columns = []
    for j in range(csc.shape[1]):
        start, end = csc.indptr[j], csc.indptr[j + 1]
        rows = csc.indices[start:end]
        values = csc.data[start:end]
        columns.append({int(r): int(v) for r, v in zip(rows, values, strict=True) if v})
    return columns


def rank_gf2(matrix: sparse.spmatrix) -> int:
    """Rank over GF(2): each column is a packed row bitset, odd entries set."""
    pivots: dict[int, int] = {}
    for column in _columns(matrix):
        bits = 0
        for row, value in column.items():
            if value & 1:
                bits |= 1 << row
        while bits:
            low = bits.bit_length() - 1
            pivot = pivots.get(low)
            if pivot is None:
                pivots[low] = bits
                break
            bits ^= pivot
    return len(pivots)


def rank_gfp(matrix: sparse.spmatrix, p: int) -> int:
    """Rank over GF(p) by sparse column reduction with monic pivots."""
    pivots: dict[int, SparseColumn] = {}
    for raw in _columns(matrix):
        column = {r: v % p for r, v in raw.items() if v % p}
        while column:
            low = max(column)
            pivot = pivots.get(low)
            if pivot is None:
                inverse = pow(column[low], -1, p)
                pivots[low] = {r: v * inverse % p for r, v in column.items()}
                break
            factor = column[low]
            for r, v in pivot.items():
                value = (column.get(r, 0) - factor * v) % p
                if value:
                    column[r] = value
                else:
                    column.pop(r, None)
    return len(pivots)


def _content_normalized(column: SparseColumn) -> SparseColumn:
    g = 0
    for v in column.values():
        g = gcd(g, v)
        if g == 1:
            return column
    return {r: v // g for r, v in column.items()}


def rank_rational_sparse(matrix: sparse.spmatrix) -> int:
    """Rank over Q by fraction-free column reduction with content normalization."""
    pivots: dict[int, SparseColumn] = {}
    for column in _columns(matrix):
        while column:
            low = max(column)
            pivot = pivots.get(low)
            if pivot is None:
                pivots[low] = _content_normalized(column)
                break
            a, b = pivot[low], column[low]
            g = gcd(a, b)
            a, b = a // g, b // g
            combined: SparseColumn = {}
            for r in column.keys() | pivot.keys():
                value = a * column.get(r, 0) - b * pivot.get(r, 0)
                if value:
                    combined[r] = value
            column = _content_normalized(combined)
    return len(pivots)


def rank_bareiss(matrix: np.ndarray) -> int:
    """
    Rank over Q of a dense integer matrix by fraction-free Bareiss elimination.

    Every division is exact, so entries stay Python integers throughout.
    """
    rows = [[int(x) for x in row] for row in matrix.tolist()]
    if not rows or not rows[0]:
        return 0
    n_rows, n_cols = len(rows), len(rows[0])
    rank, previous = 0, 1
    for col in range(n_cols):
        pivot = next((i for i in range(rank, n_rows) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        head = rows[rank]
        for i in range(rank + 1, n_rows):
            row = rows[i]
            factor = row[col]
            for j in range(col + 1, n_cols):
                row[j] = (head[col] * row[j] - factor * head[j]) // previous
            row[col] = 0
        previous = head[col]
        rank += 1
        if rank == n_rows:
            break
    return rank


def rank_rational(matrix: sparse.spmatrix) -> int:
    """Rank over Q: dense Bareiss for small matrices, sparse reduction otherwise."""
    n_rows, n_cols = matrix.shape
    if n_rows * n_cols <= DENSE_RATIONAL_LIMIT:
        return rank_bareiss(sparse.csc_matrix(matrix).toarray())
    return rank_rational_sparse(matrix)


def rank(matrix: sparse.spmatrix, field: FieldSpec) -> int:
    """Rank of an integer matrix over the given field."""
    n_rows, n_cols = matrix.shape
    if n_rows == 0 or n_cols == 0:
        return 0
    match field.kind:
        case FieldKind.GF2:
            result = rank_gf2(matrix)
        case FieldKind.GFP:
            result = rank_gfp(matrix, field.characteristic)
        case FieldKind.RATIONALS:
            result = rank_rational(matrix)
    logger.debug(f"rank over {field} of {n_rows}x{n_cols}: {result}")
    return result
