"""Dense integer polynomials in one variable t, constant term first."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with integer coefficients.

    >>> IntPolynomial((1, -1, 1))
    IntPolynomial('t^2 - t + 1')
    """
    coefficients: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _trim(int(c) for c in self.coefficients))

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def leading(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_monic(self) -> bool:
        return self.leading == 1

    def __getitem__(self, i: int) -> int:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(tuple(self[i] + other[i] for i in range(n)))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(tuple(other * c for c in self.coefficients))
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return IntPolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPolynomial:
        result = IntPolynomial((1,))
        for _ in range(e):
            result = result * self
        return result

    def divmod_monic(self, d: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Division by a polynomial with leading coefficient ±1."""
        if d.leading not in (1, -1):
            raise ValueError("divisor must have leading coefficient ±1")
        rem = list(self.coefficients)
        dd = d.degree
        if len(rem) - 1 < dd:
            return IntPolynomial(()), self
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            q = rem[i] * d.leading
            quot[i - dd] = q
            if q:
                for j, c in enumerate(d.coefficients):
                    rem[i - dd + j] -= q * c
        return IntPolynomial(tuple(quot)), IntPolynomial(tuple(rem[:dd]))

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coefficients))[1:])

    def content(self) -> int:
        g = 0
        for c in self.coefficients:
            g = gcd(g, c)
        return g

    def primitive(self) -> IntPolynomial:
        """Divide out the content, leading coefficient made positive."""
        if self.is_zero():
            return self
        g = self.content()
        if self.leading < 0:
            g = -g
        return IntPolynomial(tuple(c // g for c in self.coefficients))

    def strip_t(self) -> tuple[IntPolynomial, int]:
        """Factor as t^j * q with q(0) != 0; returns (q, j)."""
        cs = self.coefficients
        j = 0
        while j < len(cs) and cs[j] == 0:
            j += 1
        return IntPolynomial(cs[j:]), j

    def normalized(self) -> IntPolynomial:
        """Unit normal form: no factor t, positive leading coefficient."""
        q, _ = self.strip_t()
        return -q if q.leading < 0 else q

    def reversed(self) -> IntPolynomial:
        """t^deg * p(1/t)."""
        return IntPolynomial(self.coefficients[::-1])

    def substitute_neg(self) -> IntPolynomial:
        """p(-t)."""
        return IntPolynomial(tuple(c if i % 2 == 0 else -c for i, c in enumerate(self.coefficients)))

    def graeffe(self) -> IntPolynomial:
        """Root-squaring transform: the monic-signed polynomial whose roots are the squares."""
        prod = self * self.substitute_neg()
        g = IntPolynomial(prod.coefficients[::2])
        return -g if (self.degree % 2) else g

    def as_list(self) -> list[int]:
        return list(self.coefficients)

    def __repr__(self) -> str:
        return f"IntPolynomial('{self}')"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("t" if i == 1 else f"t^{i}")
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over Q[t] via the Euclidean algorithm on rationals."""
    x = [Fraction(c) for c in a.coefficients]
    y = [Fraction(c) for c in b.coefficients]
    while y:
        # x mod y
        x = list(x)
        while len(x) >= len(y) and x:
            f = x[-1] / y[-1]
            shift = len(x) - len(y)
            for j, c in enumerate(y):
                x[shift + j] -= f * c
            while x and x[-1] == 0:
                x.pop()
        x, y = y, x
    if not x:
        return IntPolynomial(())
    den = 1
    for c in x:
        den = den * c.denominator // gcd(den, c.denominator)
    return IntPolynomial(tuple(int(c * den) for c in x)).primitive()


def exact_quotient(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """a / b, required to be an exact division in Z[t]."""
    rem = [Fraction(c) for c in a.coefficients]
    db = b.degree
    quot = [Fraction(0)] * max(len(rem) - db, 0)
    for i in range(len(rem) - 1, db - 1, -1):
        q = rem[i] / b.leading
        quot[i - db] = q
        for j, c in enumerate(b.coefficients):
            rem[i - db + j] -= q * c
    if any(rem) or any(q.denominator != 1 for q in quot):
        raise ArithmeticError(f"{a} is not divisible by {b}")
    return IntPolynomial(tuple(int(q) for q in quot))


def squarefree_decomposition(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun's algorithm: p = c * prod q_i^i with q_i squarefree and coprime."""
    out = []
    a = p.primitive()
    if a.degree < 1:
        return out
    b = a.derivative()
    c = poly_gcd(a, b)
    w = exact_quotient(a, c)
    y = exact_quotient(b, c)
    i = 1
    while w.degree > 0:
        z = y - w.derivative()
        g = poly_gcd(w, z)
        if g.degree > 0:
            out.append((g, i))
        w = exact_quotient(w, g)
        y = exact_quotient(z, g)
        i += 1
    return out


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    result = IntPolynomial((1,))
    for q, _ in squarefree_decomposition(p):
        result = result * q
    return result.primitive()


def interpolate(points: Sequence[tuple[int, int]]) -> IntPolynomial:
    """The integer polynomial through the given (x, y) points (Lagrange, exact)."""
    n = len(points)
    total = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        for k, c in enumerate(basis):
            total[k] += yi * c / denom
    if any(c.denominator != 1 for c in total):
        raise ArithmeticError("interpolated polynomial is not integral")
    return IntPolynomial(tuple(int(c) for c in total))


_CYCLOTOMIC_CACHE: dict[int, IntPolynomial] = {}


def cyclotomic(n: int) -> IntPolynomial:
    """The n-th cyclotomic polynomial, from t^n - 1 by exact division."""
    if n < 1:
        raise ValueError("n must be ≥ 1")
    if n not in _CYCLOTOMIC_CACHE:
        p = IntPolynomial((-1,) + (0,) * (n - 1) + (1,))
        for d in range(1, n):
            if n % d == 0:
                p, r = p.divmod_monic(cyclotomic(d))
                assert r.is_zero()
        _CYCLOTOMIC_CACHE[n] = p
    return _CYCLOTOMIC_CACHE[n]
