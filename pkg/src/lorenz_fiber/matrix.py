"""Exact dense integer matrices as tuples of tuples of Python ints.

No floating point anywhere in here.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = tuple[tuple[int, ...], ...]


class NotUnimodular(ArithmeticError):
    pass


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(A: Matrix) -> Matrix:
    return tuple(zip(*A)) if A else ()


def matmul(A: Matrix, B: Matrix) -> Matrix:
    Bt = transpose(B)
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in Bt) for row in A)


def matvec(A: Matrix, v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(a * x for a, x in zip(row, v)) for row in A)


def sub(A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def scale(c: int, A: Matrix) -> Matrix:
    return tuple(tuple(c * a for a in row) for row in A)


def matpow(A: Matrix, e: int) -> Matrix:
    result = identity(len(A))
    base = A
    while e:
        if e & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        e >>= 1
    return result


def det(A: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(row) for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def inverse(A: Matrix) -> Matrix:
    """Inverse of a unimodular integer matrix (Gauss-Jordan over the rationals)."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(A)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if M[r][col] != 0), None)
        if pivot is None:
            raise NotUnimodular("matrix is singular")
        M[col], M[pivot] = M[pivot], M[col]
        p = M[col][col]
        M[col] = [x / p for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[col])]
    inv = []
    for row in M:
        out = []
        for x in row[n:]:
            if x.denominator != 1:
                raise NotUnimodular("inverse is not integral")
            out.append(x.numerator)
        inv.append(tuple(out))
    return tuple(inv)


def charpoly_coefficients(A: Matrix) -> list[int]:
    """Coefficients of det(t*I - A), constant term first (Berkowitz, division free)."""
    n = len(A)
    poly = [1]  # highest degree first while building
    for k in range(n):
        a = A[k][k]
        row = A[k][:k]
        col = [A[i][k] for i in range(k)]
        toeplitz = [1, -a]
        v = col
        for _ in range(k):
            toeplitz.append(-sum(x * y for x, y in zip(row, v)))
            v = [sum(A[i][j] * v[j] for j in range(k)) for i in range(k)]
        poly = [sum(toeplitz[i - j] * poly[j] for j in range(len(poly)) if 0 <= i - j < len(toeplitz))
                for i in range(k + 2)]
    return poly[::-1]


def order(A: Matrix, limit: int = 100_000) -> int | None:
    """Multiplicative order of A, or None if A^n != I for all n <= limit."""
    I = identity(len(A))
    P = A
    for n in range(1, limit + 1):
        if P == I:
            return n
        P = matmul(P, A)
    return None
