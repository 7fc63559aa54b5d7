"""Skew-symmetric matrices over polynomial rings, their Pfaffians, and small exact matrix helpers."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, List, Mapping, Sequence, Tuple

from .coeff import Field
from .polyring import Polynomial, RingDescriptor

MAX_PFAFFIAN_SIZE = 10


class MatrixShapeError(ValueError):
    """Raised when a matrix has the wrong size for the requested operation."""


@dataclass(frozen=True)
class SkewSymmetricMatrix:
    """Indices are 1-based, matching the displayed matrices M_ij."""

    ring: RingDescriptor
    size: int
    upper: Tuple[Tuple[Polynomial, ...], ...]

    @classmethod
    def from_upper(
        cls, ring: RingDescriptor, size: int, entries: Mapping[Tuple[int, int], Polynomial]
    ) -> "SkewSymmetricMatrix":
        """Build from ``{(i, j): a_ij}`` with 1 <= i < j <= size; missing entries are zero."""
        rows = []
        for i in range(1, size + 1):
            row = []
            for j in range(i + 1, size + 1):
                entry = entries.get((i, j), ring.zero())
                if entry.ring != ring:
                    raise MatrixShapeError(f"entry ({i},{j}) is not in the matrix ring")
                row.append(entry)
            rows.append(tuple(row))
        for i, j in entries:
            if not 1 <= i < j <= size:
                raise MatrixShapeError(f"entry ({i},{j}) is not strictly upper triangular")
        return cls(ring, size, tuple(rows))

    def entry(self, i: int, j: int) -> Polynomial:
        if not (1 <= i <= self.size and 1 <= j <= self.size):
            raise MatrixShapeError(f"index ({i},{j}) out of range for size {self.size}")
        if i == j:
            return self.ring.zero()
        if i < j:
            return self.upper[i - 1][j - i - 1]
        return -self.upper[j - 1][i - j - 1]

    def rows(self) -> List[List[Polynomial]]:
        return [[self.entry(i, j) for j in range(1, self.size + 1)] for i in range(1, self.size + 1)]

    def delete(self, *indices: int) -> "SkewSymmetricMatrix":
        """Principal submatrix with the given rows/columns removed."""
        keep = [k for k in range(1, self.size + 1) if k not in indices]
        entries = {
            (a + 1, b + 1): self.entry(keep[a], keep[b])
            for a in range(len(keep))
            for b in range(a + 1, len(keep))
        }
        return SkewSymmetricMatrix.from_upper(self.ring, len(keep), entries)

    def apply(self, vector: Sequence[Polynomial]) -> List[Polynomial]:
        if len(vector) != self.size:
            raise MatrixShapeError("vector length does not match matrix size")
        result = []
        for i in range(1, self.size + 1):
            total = self.ring.zero()
            for j in range(1, self.size + 1):
                if i != j:
                    total = total + self.entry(i, j) * vector[j - 1]
            result.append(total)
        return result


def pfaffian(matrix: SkewSymmetricMatrix) -> Polynomial:
    """Expansion along the first row, memoised on the surviving index set."""
    if matrix.size % 2:
        raise MatrixShapeError("Pfaffian of an odd-sized matrix; use submaximal_pfaffians")
    if matrix.size > MAX_PFAFFIAN_SIZE:
        raise MatrixShapeError(f"Pfaffians are limited to size {MAX_PFAFFIAN_SIZE}")

    @lru_cache(maxsize=None)
    def expand(indices: Tuple[int, ...]) -> Polynomial:
        if not indices:
            return matrix.ring.one()
        first, rest = indices[0], indices[1:]
        total = matrix.ring.zero()
        for pos, j in enumerate(rest):
            a = matrix.entry(first, j)
            if a.is_zero():
                continue
            minor = expand(rest[:pos] + rest[pos + 1 :])
            term = a * minor
            total = total - term if pos % 2 else total + term
        return total

    return expand(tuple(range(1, matrix.size + 1)))


def submaximal_pfaffians(matrix: SkewSymmetricMatrix) -> List[Polynomial]:
    """The five 4x4 principal Pfaffians of a 5x5 matrix, k-th one deleting row/column k.

    Signs are negated relative to the plain expansion so that for the matrices
    M_ij the k = 1 entry reads y_i*y_j - Qxz*Qzx + Qxx*Qzz.
    """
    if matrix.size != 5:
        raise MatrixShapeError("submaximal Pfaffians are defined here for 5x5 matrices")
    return [-pfaffian(matrix.delete(k)) for k in range(1, 6)]


def signed_pfaffian_vector(matrix: SkewSymmetricMatrix) -> List[Polynomial]:
    """(p1, -p2, p3, -p4, p5), annihilated by the matrix."""
    pfs = submaximal_pfaffians(matrix)
    return [p if k % 2 == 0 else -p for k, p in enumerate(pfs)]


def kernel_residual(matrix: SkewSymmetricMatrix) -> List[Polynomial]:
    return matrix.apply(signed_pfaffian_vector(matrix))


def determinant(rows: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Laplace expansion along the first row, memoised on the remaining columns."""
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise MatrixShapeError("determinant of a non-square matrix")
    if n == 0:
        raise MatrixShapeError("determinant of an empty matrix")
    ring = rows[0][0].ring
    cache: Dict[Tuple[int, Tuple[int, ...]], Polynomial] = {}

    def expand(row: int, cols: Tuple[int, ...]) -> Polynomial:
        if not cols:
            return ring.one()
        key = (row, cols)
        if key in cache:
            return cache[key]
        total = ring.zero()
        for pos, c in enumerate(cols):
            a = rows[row][c]
            if a.is_zero():
                continue
            term = a * expand(row + 1, cols[:pos] + cols[pos + 1 :])
            total = total - term if pos % 2 else total + term
        cache[key] = total
        return total

    return expand(0, tuple(range(n)))


def matrix_rank(rows: Sequence[Sequence[Any]], field: Field) -> int:
    """Rank of a matrix of field elements by Gaussian elimination."""
    work = [list(row) for row in rows]
    if not work:
        return 0
    rank = 0
    ncols = len(work[0])
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(work)) if not field.is_zero(work[r][col])), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = field.inv(work[rank][col])
        for r in range(len(work)):
            if r != rank and not field.is_zero(work[r][col]):
                factor = field.mul(work[r][col], inv)
                work[r] = [field.sub(x, field.mul(factor, y)) for x, y in zip(work[r], work[rank])]
        rank += 1
    return rank


__all__ = [
    "determinant",
    "kernel_residual",
    "matrix_rank",
    "MatrixShapeError",
    "pfaffian",
    "signed_pfaffian_vector",
    "SkewSymmetricMatrix",
    "submaximal_pfaffians",
]
