"""Homological monodromy of the fiber surface, computed two independent ways.

Seifert route: ``H = SIGN * V^-1 V^T``.

Twist route: ``H = T(c_1) T(c_2) ... T(c_m)`` over the cells in canonical
order (so ``c_m`` acts first), with the transvection
``T(c) x = x + <e_c, x> e_c`` and ``<u, v> = u^T J v``.

These constants are the unique choice that makes both routes agree and makes
the inverse monodromy send every internal elementary class to its northern
neighbor.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import matrix as mx
from .diagram import YoungDiagram
from .matrix import Matrix, NotUnimodular
from .polynomial import IntPolynomial, interpolate
from .surface import SeifertData

SIGN = 1
TRANSVECTION_SIGN = 1


@dataclass(frozen=True)
class MonodromyMatrix:
    H: Matrix
    H_inv: Matrix

    @property
    def rank(self) -> int:
        return len(self.H)


def monodromy_seifert_route(S: SeifertData) -> MonodromyMatrix:
    d = mx.det(S.V)
    if abs(d) != 1:
        raise NotUnimodular(f"det V = {d}")
    V_inv = mx.inverse(S.V)
    H = mx.scale(SIGN, mx.matmul(V_inv, mx.transpose(S.V)))
    H_inv = mx.scale(SIGN, mx.matmul(mx.inverse(mx.transpose(S.V)), S.V))
    return MonodromyMatrix(H=H, H_inv=H_inv)


def _apply_transvection(rows: list[list[int]], J: Matrix, c: int, sign: int) -> None:
    # rows <- T(c) rows ; only row c changes: row_c += sign * sum_j J[c][j] row_j
    delta = [0] * len(rows[0])
    for j, w in enumerate(J[c]):
        if w:
            rj = rows[j]
            for k in range(len(delta)):
                delta[k] += w * rj[k]
    rc = rows[c]
    for k in range(len(delta)):
        rc[k] += sign * delta[k]


def monodromy_twist_route(D: YoungDiagram, S: SeifertData) -> MonodromyMatrix:
    m = S.rank
    if m != D.size:
        raise ValueError("Seifert data does not belong to this diagram")
    H = [list(r) for r in mx.identity(m)]
    # build T(c_1) ... T(c_m) by left multiplication, innermost first
    for c in reversed(range(m)):
        _apply_transvection(H, S.J, c, TRANSVECTION_SIGN)
    # inverse: T(c)^-1 = x - <e_c, x> e_c, product reversed
    H_inv = [list(r) for r in mx.identity(m)]
    for c in range(m):
        _apply_transvection(H_inv, S.J, c, -TRANSVECTION_SIGN)
    return MonodromyMatrix(H=mx.as_matrix(H), H_inv=mx.as_matrix(H_inv))


def transvection(J: Matrix, c: int, sign: int = TRANSVECTION_SIGN) -> Matrix:
    rows = [list(r) for r in mx.identity(len(J))]
    _apply_transvection(rows, J, c, sign)
    return mx.as_matrix(rows)


def char_poly(H: Matrix | MonodromyMatrix) -> IntPolynomial:
    if isinstance(H, MonodromyMatrix):
        H = H.H
    return IntPolynomial(tuple(mx.charpoly_coefficients(H)))


def alexander_polynomial(S: SeifertData) -> IntPolynomial:
    """det(t V - V^T), normalized: positive leading coefficient, not divisible by t.

    Evaluated at m + 1 integer points with Bareiss determinants and
    interpolated, so it shares no code path with the characteristic polynomial.
    """
    V = S.V
    Vt = mx.transpose(V)
    m = len(V)
    points = []
    for x in range(m + 1):
        M = [[x * V[i][j] - Vt[i][j] for j in range(m)] for i in range(m)]
        points.append((x, mx.det(M)))
    return interpolate(points).normalized()
