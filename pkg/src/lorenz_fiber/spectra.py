"""Dilatation data from integer characteristic polynomials.

The roots-of-unity decision is exact.  Root moduli are certified: cyclotomic
factors are divided out exactly, the rest is squarefree, its roots are
approximated with mpmath and each approximation is wrapped in an inclusion
disc (Smith's Gerschgorin-type bound ``n |p(z_j)| / |prod_{k != j} (z_j - z_k)|``).
Disjoint discs each hold exactly one root, which gives two-sided bounds.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from math import comb

import mpmath
from mpmath.libmp.libhyper import NoConvergence

from .polynomial import IntPolynomial, cyclotomic, squarefree_decomposition

DEFAULT_TOL = 1e-9


class DegreeZero(ValueError):
    pass


class ZeroConstantTerm(ValueError):
    pass


class NotMonic(ValueError):
    pass


def _monic(p: IntPolynomial) -> IntPolynomial:
    if p.leading == -1:
        return -p
    if p.leading != 1:
        raise NotMonic(f"{p} is not monic")
    return p


def cyclotomic_test(p: IntPolynomial) -> bool:
    """True iff every root of p is a root of unity.

    Graeffe iteration on the squarefree part.  All coefficients of a monic
    degree-d polynomial whose roots lie in the closed unit disc are bounded by
    binomial(d, j), so the iterates either revisit a polynomial (all roots
    are roots of unity) or break that bound (some root has modulus > 1).
    """
    p = _monic(p)
    if p.degree < 0:
        raise DegreeZero("zero polynomial")
    if p[0] == 0:
        raise ZeroConstantTerm(f"{p} has zero constant term")
    if p.degree == 0:
        return True
    q = IntPolynomial((1,))
    for factor, _ in squarefree_decomposition(p):
        q = q * factor
    q = _monic(q)
    d = q.degree
    seen = set()
    while q.coefficients not in seen:
        if any(abs(c) > comb(d, j) for j, c in enumerate(q.coefficients)):
            return False
        seen.add(q.coefficients)
        q = q.graeffe()
    return True


def totient(n: int) -> int:
    result, m, q = n, n, 2
    while q * q <= m:
        if m % q == 0:
            while m % q == 0:
                m //= q
            result -= result // q
        q += 1
    if m > 1:
        result -= result // m
    return result


def cyclotomic_split(p: IntPolynomial) -> tuple[list[tuple[int, int]], IntPolynomial]:
    """Divide out cyclotomic factors by trial division.

    Returns ``([(n, multiplicity), ...], rest)`` with ``p = prod Phi_n^mult * rest``.
    Indices run up to ``2 deg(p)^2``, which covers every n with phi(n) <= deg(p).
    """
    rest = p
    found = []
    limit = 2 * max(p.degree, 1) ** 2
    for n in range(1, limit + 1):
        if totient(n) > rest.degree:
            continue
        phi = cyclotomic(n)
        mult = 0
        while rest.degree >= phi.degree:
            q, r = rest.divmod_monic(phi)
            if not r.is_zero():
                break
            rest = q
            mult += 1
        if mult:
            found.append((n, mult))
        if rest.degree == 0:
            break
    return found, rest


def is_cyclotomic_product(p: IntPolynomial) -> bool:
    """Trial-division cross-check of cyclotomic_test."""
    _, rest = cyclotomic_split(_monic(p))
    return rest.degree == 0


@dataclass(frozen=True)
class RootEnclosure:
    center: complex
    radius: float
    multiplicity: int
    exact_modulus: float | None = None

    @property
    def modulus_bounds(self) -> tuple[float, float]:
        if self.exact_modulus is not None:
            return self.exact_modulus, self.exact_modulus
        m = abs(self.center)
        return max(m - self.radius, 0.0), m + self.radius


def _enclose(q: IntPolynomial, dps: int) -> list[tuple[mpmath.mpc, mpmath.mpf]] | None:
    coeffs = list(reversed(q.coefficients))
    with mpmath.workdps(dps):
        try:
            roots = mpmath.polyroots(coeffs, maxsteps=50 + 20 * q.degree, extraprec=2 * dps)
        except NoConvergence:
            return None
        n = q.degree
        out = []
        for j, z in enumerate(roots):
            denom = mpmath.mpf(1)
            for k, w in enumerate(roots):
                if k != j:
                    denom *= z - w
            if denom == 0:
                return None
            val = mpmath.polyval(coeffs, z)
            # one unit of working precision on top for rounding in the evaluation
            r = n * abs(val / (q.leading * denom)) + abs(z) * mpmath.mpf(10) ** (-dps + 5)
            out.append((z, r))
        for j in range(n):
            for k in range(j + 1, n):
                if abs(out[j][0] - out[k][0]) <= out[j][1] + out[k][1]:
                    return None
        return out


def root_enclosures(p: IntPolynomial, tol: float = DEFAULT_TOL) -> list[RootEnclosure]:
    """Certified discs for all roots of p with multiplicity.

    Roots of cyclotomic factors are reported exactly (radius 0).
    """
    p = _monic(p)
    if p.degree < 1:
        raise DegreeZero(f"{p} has degree < 1")
    out: list[RootEnclosure] = []
    q0, j = p.strip_t()
    if j:
        out.append(RootEnclosure(0j, 0.0, j, exact_modulus=0.0))
    for factor, mult in squarefree_decomposition(q0):
        cyc, rest = cyclotomic_split(_monic(factor))
        for n, _ in cyc:
            for k in range(1, n + 1):
                if math.gcd(k, n) == 1:
                    z = complex(math.cos(2 * math.pi * k / n), math.sin(2 * math.pi * k / n))
                    out.append(RootEnclosure(z, 0.0, mult, exact_modulus=1.0))
        if rest.degree < 1:
            continue
        rest = _monic(rest)
        dps = 30
        while True:
            discs = _enclose(rest, dps)
            if discs is not None and max(float(r) for _, r in discs) <= tol / 4:
                break
            dps *= 2
            if dps > 2000:
                raise ArithmeticError(f"could not certify the roots of {rest}")
        out.extend(RootEnclosure(complex(z), float(r), mult) for z, r in discs)
    return out


def spectral_radius(p: IntPolynomial, tol: float = DEFAULT_TOL) -> tuple[float, float]:
    """(radius, error bound) with the true max |root| within the bound."""
    discs = root_enclosures(p, tol)
    lo = max(e.modulus_bounds[0] for e in discs)
    hi = max(e.modulus_bounds[1] for e in discs)
    if all(e.exact_modulus is not None for e in discs):
        return hi, 0.0
    return (lo + hi) / 2, (hi - lo) / 2 + 4 * math.ulp(hi)


def mahler_measure(p: IntPolynomial, tol: float = DEFAULT_TOL) -> tuple[float, float]:
    """(M(p), error bound); p monic, so M(p) = prod max(1, |root|)."""
    discs = root_enclosures(p, tol / max(p.degree, 1))
    lo = hi = 1.0
    for e in discs:
        a, b = e.modulus_bounds
        lo *= max(1.0, a) ** e.multiplicity
        hi *= max(1.0, b) ** e.multiplicity
    if all(e.exact_modulus is not None for e in discs):
        return hi, 0.0
    # float products: one rounding per factor on each side
    return (lo + hi) / 2, (hi - lo) / 2 + (2 * p.degree + 4) * math.ulp(hi)


@dataclass(frozen=True)
class SpectrumReport:
    poly: IntPolynomial
    spectral_radius: float
    radius_error: float
    mahler_measure: float
    mahler_error: float
    is_unit_root_only: bool

    @property
    def log_dilatation_hom(self) -> float:
        return 0.0 if self.is_unit_root_only else math.log(self.spectral_radius)


def spectrum(p: IntPolynomial, tol: float = DEFAULT_TOL) -> SpectrumReport:
    unit = cyclotomic_test(p)
    if unit:
        return SpectrumReport(p, 1.0, 0.0, 1.0, 0.0, True)
    rho, rho_err = spectral_radius(p, tol)
    mahler, mahler_err = mahler_measure(p, tol)
    return SpectrumReport(p, rho, rho_err, mahler, mahler_err, False)
