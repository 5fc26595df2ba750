"""The canonical fiber surface of a Lorenz braid closure.

One disc per strand, one positively twisted band per crossing.  First
homology is free of rank ``|word| - n + 1``, generated by *bricks*: the loop
through two consecutive crossings of the same generator.  For a Lorenz braid
each brick encloses exactly one cell of the diagram and is its elementary
class.

Seifert form on bricks (``V[x][y] = lk(x, y+)``), all other entries zero:

* ``V[x][x] = -1``;
* ``x`` directly followed by ``y`` on the same generator: ``V[x][y] = 1``;
* ``x`` on generator ``i + 1`` and ``y`` on generator ``i`` with interleaved
  crossings: ``V[x][y] = 1`` if ``y`` starts first, ``-1`` if ``x`` starts
  first.

The discs are stacked, so every band of generator ``i + 1`` lies on the
same side of the shared disc as seen from generator ``i``; that makes ``V``
triangular in the canonical cell order below.
"""
from __future__ import annotations

from dataclasses import dataclass

from .braid import LorenzBraid, build_braid, closure_components
from .diagram import Cell, YoungDiagram
from .matrix import Matrix, det, sub, transpose


class BasisMismatch(RuntimeError):
    pass


@dataclass(frozen=True)
class SurfaceStats:
    euler: int
    betti1: int
    boundary_components: int
    genus: int

    # |chi| in the dilatation bound counts cells (= betti1), not 1 - euler.
    CHI_CONVENTION = "|χ| := cell count"


def surface_stats(D: YoungDiagram, B: LorenzBraid | None = None) -> SurfaceStats:
    B = B or build_braid(D)
    euler = B.n - len(B.word)
    betti1 = 1 - euler
    boundary = closure_components(B)
    # 2g + boundary - 1 = betti1 for a connected surface
    return SurfaceStats(euler=euler, betti1=betti1, boundary_components=boundary,
                        genus=(betti1 - boundary + 1) // 2)


def canonical_order(D: YoungDiagram) -> list[Cell]:
    """Cells in twist order: rows top to bottom, each row right to left.

    In the hanging picture the rows are the strips of cells running away
    from the corner, so this is the strip-by-strip, far-end-first reading
    of the twist factorization.
    """
    return sorted(D.cells, key=lambda c: (c[0], -c[1]))


@dataclass(frozen=True)
class Brick:
    generator: int
    first: int
    second: int

    def interleaves(self, other: Brick) -> bool:
        return (self.first < other.first < self.second < other.second
                or other.first < self.first < other.second < self.second)


@dataclass(frozen=True)
class CycleBasis:
    cells: tuple[Cell, ...]
    bricks: tuple[Brick, ...]

    def index(self, cell: Cell) -> int:
        return self.cells.index(cell)


def bricks_of(B: LorenzBraid) -> list[Brick]:
    out = []
    for g, positions in sorted(B.generator_positions().items()):
        out.extend(Brick(g, a, b) for a, b in zip(positions, positions[1:]))
    return out


def cycle_basis(B: LorenzBraid, D: YoungDiagram) -> CycleBasis:
    bricks = bricks_of(B)
    if len(bricks) != D.size:
        raise BasisMismatch(f"{len(bricks)} bricks for {D.size} cells")
    # generator g sits on the diagonal col - row = g - height - 1
    by_diag: dict[int, list[Cell]] = {}
    for c in sorted(D.cells):
        by_diag.setdefault(c[1] - c[0], []).append(c)
    cell_of = {}
    for g, positions in B.generator_positions().items():
        diag = by_diag.get(g - D.height - 1, [])
        if len(diag) != len(positions) - 1:
            raise BasisMismatch(f"generator {g}: {len(positions) - 1} bricks, {len(diag)} cells")
        for cell, (a, b) in zip(diag, zip(positions, positions[1:])):
            cell_of[cell] = Brick(g, a, b)
    cells = tuple(canonical_order(D))
    return CycleBasis(cells=cells, bricks=tuple(cell_of[c] for c in cells))


def seifert_entry(x: Brick, y: Brick) -> int:
    if x == y:
        return -1
    if x.generator == y.generator:
        return 1 if x.second == y.first else 0
    if x.generator == y.generator + 1 and x.interleaves(y):
        return 1 if y.first < x.first else -1
    return 0


@dataclass(frozen=True)
class SeifertData:
    basis: CycleBasis
    V: Matrix
    J: Matrix

    @property
    def cells(self) -> tuple[Cell, ...]:
        return self.basis.cells

    @property
    def rank(self) -> int:
        return len(self.V)


def seifert_matrix(B: LorenzBraid, basis: CycleBasis) -> SeifertData:
    V = tuple(tuple(seifert_entry(x, y) for y in basis.bricks) for x in basis.bricks)
    return SeifertData(basis=basis, V=V, J=sub(V, transpose(V)))


def seifert_data(D: YoungDiagram) -> SeifertData:
    B = build_braid(D)
    return seifert_matrix(B, cycle_basis(B, D))


def is_unimodular(S: SeifertData) -> bool:
    return abs(det(S.V)) == 1
