"""Orbits of elementary classes under the inverse monodromy.

Everything here is a homological shadow of a statement about curves: the
length of a curve is replaced by the l1 norm of its class in the elementary
basis, and "lies in a region" by "is supported on the cells of the region".
Dilatations are homological, so the bound checks only run in the safe
direction (rho(H) is a lower bound for the geometric dilatation).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .diagram import Cell, YoungDiagram, classify_cells, decompose
from .homology import MonodromyMatrix, char_poly, monodromy_twist_route
from .matrix import Matrix
from .spectra import spectrum
from .surface import SeifertData, seifert_data

Vector = tuple[int, ...]


class NotInFamilyRegime(ValueError):
    pass


class BoundDegenerate(ValueError):
    pass


def default_steps(l: int) -> int:
    return max(200, 20 * l)


def _sparse_columns(A: Matrix) -> list[list[tuple[int, int]]]:
    n = len(A)
    return [[(i, A[i][j]) for i in range(n) if A[i][j]] for j in range(n)]


def _apply(cols: list[list[tuple[int, int]]], v: Sequence[int]) -> Vector:
    out = [0] * len(v)
    for j, x in enumerate(v):
        if x:
            for i, w in cols[j]:
                out[i] += w * x
    return tuple(out)


def l1(v: Sequence[int]) -> int:
    return sum(abs(x) for x in v)


def support(v: Sequence[int], cells: Sequence[Cell]) -> frozenset[Cell]:
    return frozenset(c for c, x in zip(cells, v) if x)


@dataclass(frozen=True)
class OrbitTrace:
    start_cell: Cell
    cells: tuple[Cell, ...]
    vectors: tuple[Vector, ...]

    @property
    def steps(self) -> int:
        return len(self.vectors) - 1

    @property
    def l1_norms(self) -> tuple[int, ...]:
        return tuple(l1(v) for v in self.vectors)

    @property
    def supports(self) -> tuple[frozenset[Cell], ...]:
        return tuple(support(v, self.cells) for v in self.vectors)

    @property
    def est_growth_rate(self) -> float:
        return math.log(l1(self.vectors[-1])) / self.steps


def orbit_trace(H_inv: Matrix, cells: Sequence[Cell], cell: Cell, N: int) -> OrbitTrace:
    """The vectors H_inv^n e_cell for n = 0..N, exact."""
    if N < 1:
        raise ValueError("N must be ≥ 1")
    cells = tuple(cells)
    cols = _sparse_columns(H_inv)
    v = tuple(int(c == cell) for c in cells)
    if not any(v):
        raise ValueError(f"{cell} is not a cell of the basis")
    vectors = [v]
    for _ in range(N):
        v = _apply(cols, v)
        vectors.append(v)
    return OrbitTrace(start_cell=cell, cells=cells, vectors=tuple(vectors))


def growth_rate(trace: OrbitTrace, method: str = "max") -> float:
    """Late-window growth estimate of the l1 norms.

    ``method="window"`` is ``log(|v_N| / |v_{N/2}|) / (N - N/2)``.  It is
    thrown off by periodic orbits whose norm oscillates, so the default uses
    running maxima ``M_n = max_{m <= n} |v_m|`` in the same formula, which is
    0 for every periodic orbit once N/2 exceeds the period.
    """
    N = trace.steps
    if N < 50:
        raise ValueError("growth_rate needs N ≥ 50")
    norms = trace.l1_norms
    h = N // 2
    if method == "window":
        hi, lo = norms[N], norms[h]
    elif method == "max":
        hi, lo = max(norms), max(norms[: h + 1])
    else:
        raise ValueError(f"unknown method {method!r}")
    return math.log(hi / lo) / (N - h)


@dataclass(frozen=True)
class LemmaViolation:
    cell: Cell
    expected: str
    got: Vector


@dataclass
class LemmaReport:
    lemma: str
    columns: tuple[int, ...]
    checked: int = 0
    violations: list[LemmaViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "lemma": self.lemma,
            "columns": list(self.columns),
            "checked": self.checked,
            "violations": [
                {"cell": list(v.cell), "expected": v.expected, "got": list(v.got)}
                for v in self.violations
            ],
        }


def _pipeline(D: YoungDiagram, S: SeifertData | None, M: MonodromyMatrix | None):
    S = S or seifert_data(D)
    M = M or monodromy_twist_route(D, S)
    return S, M


def internal_lemma_check(D: YoungDiagram, S: SeifertData | None = None,
                         M: MonodromyMatrix | None = None) -> LemmaReport:
    """H_inv e_d = e_a for every internal cell d with northern neighbor a."""
    S, M = _pipeline(D, S, M)
    cells = S.cells
    index = {c: i for i, c in enumerate(cells)}
    report = LemmaReport("internal", D.columns)
    for d, a in sorted(classify_cells(D).internal.items()):
        report.checked += 1
        got = tuple(row[index[d]] for row in M.H_inv)
        want = tuple(int(c == a) for c in cells)
        if got != want:
            report.violations.append(LemmaViolation(d, f"e{a}", got))
    return report


def external_lemma_check(D: YoungDiagram, zone: str = "mixing",
                         S: SeifertData | None = None,
                         M: MonodromyMatrix | None = None) -> LemmaReport:
    """support(H_inv^2 e_c) in the zone and l1 bounded, for every external cell.

    ``zone="mixing"`` is the literal statement: rows > l and l1 <= k.
    ``zone="widened"`` allows the last rectangle row too, with l1 <= k + b;
    this weaker form holds across the whole family sweep while the literal
    one does not.
    """
    fam = decompose(D)
    if fam.k == 0 or fam.l < 2:
        raise NotInFamilyRegime(f"{D}: k={fam.k}, l={fam.l}")
    if zone == "mixing":
        region, bound = fam.mixing_cells, fam.k
    elif zone == "widened":
        region = frozenset(c for c in D.cells if c[0] >= fam.l)
        bound = fam.k + fam.b
    else:
        raise ValueError(f"unknown zone {zone!r}")
    S, M = _pipeline(D, S, M)
    cols = _sparse_columns(M.H_inv)
    report = LemmaReport(f"external/{zone}", D.columns)
    for c in sorted(classify_cells(D).external):
        report.checked += 1
        v = tuple(int(x == c) for x in S.cells)
        v = _apply(cols, _apply(cols, v))
        if not support(v, S.cells) <= region or l1(v) > bound:
            report.violations.append(LemmaViolation(c, f"support in {zone} zone, l1 <= {bound}", v))
    return report


def transit_lengths(D: YoungDiagram, N: int | None = None,
                    S: SeifertData | None = None,
                    M: MonodromyMatrix | None = None) -> dict[Cell, int | None]:
    """First n with H_inv^n e_c touching the mixing zone, per starting cell.

    None when the orbit stays out of the zone for N steps (always the case
    for rectangles).
    """
    fam = decompose(D)
    S, M = _pipeline(D, S, M)
    N = N or default_steps(fam.l)
    cols = _sparse_columns(M.H_inv)
    zone = [c in fam.mixing_cells for c in S.cells]
    out: dict[Cell, int | None] = {}
    for cell in S.cells:
        v = tuple(int(x == cell) for x in S.cells)
        hit = None
        for n in range(N + 1):
            if any(x and z for x, z in zip(v, zone)):
                hit = n
                break
            v = _apply(cols, v)
        out[cell] = hit
    return out


@dataclass(frozen=True)
class BoundReport:
    b: int
    k: int
    l: int
    cells: int
    rho: float
    rho_error: float
    bound: float
    bound_surface_chi: float
    margin: float
    holds: bool

    @property
    def log_rho(self) -> float:
        return math.log(self.rho)


def theorem_bound_check(D: YoungDiagram, S: SeifertData | None = None,
                        M: MonodromyMatrix | None = None) -> BoundReport:
    """log rho(H) against b log k / (cells - k) = log k / l.

    ``bound_surface_chi`` uses the surface Euler characteristic instead,
    ``b log k / (cells - 1 - k)``; it is recorded, not checked.
    """
    fam = decompose(D)
    if fam.k <= 1:
        raise BoundDegenerate(f"{D}: k={fam.k}")
    S, M = _pipeline(D, S, M)
    rep = spectrum(char_poly(M))
    cells = D.size
    bound = fam.b * math.log(fam.k) / (cells - fam.k)
    denom = cells - 1 - fam.k
    surface_bound = fam.b * math.log(fam.k) / denom if denom > 0 else math.inf
    log_rho = rep.log_dilatation_hom
    # |d log rho| <= err / (rho - err)
    log_err = rep.radius_error / max(rep.spectral_radius - rep.radius_error, 1.0)
    margin = bound - log_rho
    return BoundReport(b=fam.b, k=fam.k, l=fam.l, cells=cells, rho=rep.spectral_radius,
                       rho_error=rep.radius_error, bound=bound,
                       bound_surface_chi=surface_bound, margin=margin,
                       holds=margin >= -log_err)


def blockwise_violations(trace: OrbitTrace, k: int, l: int) -> list[int]:
    """Steps n where |v_{n+l}| > k |v_n|."""
    norms = trace.l1_norms
    return [n for n in range(len(norms) - l) if norms[n + l] > k * norms[n]]
