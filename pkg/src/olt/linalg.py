"""Dense linear algebra over the prime field Z_q.

Matrices are lists of rows and vectors are lists, all entries ``int``
reduced modulo ``q``.  The sizes involved are those of a lookup table,
so everything here is the schoolbook algorithm.
"""

from __future__ import annotations

import secrets
from typing import List, Sequence

from .errors import DimensionMismatch, DuplicateInput, SingularMatrix

Matrix = List[List[int]]
Vector = List[int]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _shape(M: Sequence[Sequence[int]]):
    rows = len(M)
    if rows == 0:
        raise DimensionMismatch("empty matrix")
    cols = len(M[0])
    if cols == 0 or any(len(r) != cols for r in M):
        raise DimensionMismatch("ragged or empty rows")
    return rows, cols


def _square(M) -> int:
    rows, cols = _shape(M)
    if rows != cols:
        raise DimensionMismatch(f"expected a square matrix, got {rows}x{cols}")
    return rows


def power_row(x: int, n: int, q: int) -> Vector:
    """``(1, x, x**2, ..., x**(n-1))`` modulo ``q``."""
    row = [1 % q] * n
    for j in range(1, n):
        row[j] = row[j - 1] * x % q
    return row


def vandermonde(xs: Sequence[int], q: int) -> Matrix:
    n = len(xs)
    if n < 1:
        raise DimensionMismatch("need at least one node")
    reduced = [x % q for x in xs]
    if len(set(reduced)) != n:
        raise DuplicateInput("nodes must be pairwise distinct mod q")
    return [power_row(x, n, q) for x in reduced]


def _gauss_jordan(M: Matrix, rhs: Matrix, q: int) -> Matrix:
    """Reduce ``[M | rhs]`` to ``[I | M^-1 rhs]`` and return the right block."""
    n = len(M)
    aug = [[v % q for v in M[i]] + [v % q for v in rhs[i]] for i in range(n)]
    width = len(aug[0])
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise SingularMatrix(f"no nonzero pivot in column {col}")
        if pivot != col:
            aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = pow(aug[col][col], -1, q)
        prow = [v * inv % q for v in aug[col]]
        aug[col] = prow
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                row = aug[r]
                aug[r] = [(row[k] - f * prow[k]) % q for k in range(width)]
    return [row[n:] for row in aug]


def solve(M: Matrix, y: Sequence[int], q: int) -> Vector:
    n = _square(M)
    if len(y) != n:
        raise DimensionMismatch(f"right-hand side has length {len(y)}, expected {n}")
    return [row[0] for row in _gauss_jordan(M, [[v] for v in y], q)]


def invert(M: Matrix, q: int) -> Matrix:
    return _gauss_jordan(M, identity(_square(M)), q)


def is_invertible(M: Matrix, q: int) -> bool:
    try:
        invert(M, q)
    except SingularMatrix:
        return False
    return True


def _sample_invertible(n: int, q: int, rng=None):
    rng = rng or secrets.SystemRandom()
    attempts = 0
    while True:
        attempts += 1
        M = [[rng.randrange(q) for _ in range(n)] for _ in range(n)]
        if is_invertible(M, q):
            return M, attempts


def random_invertible(n: int, q: int, rng=None) -> Matrix:
    """Uniform random matrix, resampled until it is invertible."""
    if n < 1:
        raise ValueError("n must be positive")
    return _sample_invertible(n, q, rng)[0]


def dot(a: Sequence[int], b: Sequence[int], q: int) -> int:
    if len(a) != len(b):
        raise DimensionMismatch(f"lengths {len(a)} and {len(b)} differ")
    return sum(x * y for x, y in zip(a, b)) % q


def mat_vec(M: Matrix, x: Sequence[int], q: int) -> Vector:
    _, cols = _shape(M)
    if cols != len(x):
        raise DimensionMismatch(f"matrix has {cols} columns, vector has {len(x)} entries")
    return [sum(m * v for m, v in zip(row, x)) % q for row in M]


def mat_mul(A: Matrix, B: Matrix, q: int) -> Matrix:
    _, inner = _shape(A)
    rows_b, _ = _shape(B)
    if inner != rows_b:
        raise DimensionMismatch(f"cannot multiply {len(A)}x{inner} by {rows_b}x{len(B[0])}")
    cols_b = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) % q for col in cols_b] for row in A]
