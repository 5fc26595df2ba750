from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from lorenz_fiber.matrix import NotUnimodular, charpoly_coefficients, det, identity, inverse, matmul
from lorenz_fiber.polynomial import (IntPolynomial, cyclotomic, exact_quotient, interpolate,
                                     poly_gcd, squarefree_decomposition)
from oracles import charpoly, t

import sympy as sp

small_ints = st.integers(-4, 4)
square = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=n, max_size=n))
polys = st.lists(small_ints, min_size=1, max_size=6).map(lambda cs: IntPolynomial(tuple(cs)))


@given(square)
def test_det_and_charpoly_match_sympy(A):
    assert det(A) == int(sp.Matrix(A).det())
    assert charpoly_coefficients(tuple(map(tuple, A))) == charpoly(A)


def test_inverse():
    A = ((2, 1), (1, 1))
    assert matmul(A, inverse(A)) == identity(2)
    with pytest.raises(NotUnimodular):
        inverse(((2, 0), (0, 1)))
    with pytest.raises(NotUnimodular):
        inverse(((1, 1), (1, 1)))


@given(polys, polys)
def test_ring_ops(p, q):
    for x in range(-3, 4):
        assert (p * q)(x) == p(x) * q(x)
        assert (p + q)(x) == p(x) + q(x)
    assert (p + q) - q == p
    if not p.is_zero():
        P = sp.Poly(list(reversed(p.coefficients)), t)
        assert p(3) == int(P.eval(3))


@given(polys)
def test_squarefree_decomposition(p):
    if p.degree < 1:
        return
    prod = IntPolynomial((1,))
    for f, m in squarefree_decomposition(p):
        assert poly_gcd(f, f.derivative()).degree == 0
        prod = prod * f ** m
    assert prod.primitive().degree == p.degree
    assert exact_quotient(p.primitive(), prod.primitive()).degree == 0


def test_cyclotomic_matches_sympy():
    for n in range(1, 40):
        assert cyclotomic(n).as_list() == [int(c) for c in reversed(sp.Poly(sp.cyclotomic_poly(n, t), t).all_coeffs())]


def test_interpolate_and_str():
    p = IntPolynomial((1, -1, 1))
    assert interpolate([(x, p(x)) for x in range(3)]) == p
    assert str(p) == "t^2 - t + 1"
    assert str(IntPolynomial((0, -2))) == "-2t"
    assert p.graeffe() == IntPolynomial((1, 1, 1))
    with pytest.raises(ArithmeticError):
        exact_quotient(IntPolynomial((1, 0, 1)), IntPolynomial((1, 1)))
