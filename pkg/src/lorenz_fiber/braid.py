"""Lorenz braids of hanging Young diagrams.

The grid of a diagram in hanging position is made of ``rows + 1`` NW-SE
lines (the horizontal grid lines ``y = i``) and ``cols + 1`` NE-SW lines (the
vertical grid lines ``x = j``).  Each line is a strand.  Every lattice vertex
incident to a cell is a point where one line of each family meets; it becomes
a positive crossing, NW-SE strand over.  Vertices are swept top to bottom
(height ``x + y``), ties left to right (``x - y``).
"""
from __future__ import annotations

from dataclasses import dataclass

from .diagram import YoungDiagram


@dataclass(frozen=True)
class LorenzBraid:
    n: int
    word: tuple[int, ...]
    # vertex (x, y) of the grid for each letter, x = column line, y = row line
    vertices: tuple[tuple[int, int], ...] = ()

    @property
    def permutation(self) -> tuple[int, ...]:
        """Final position (1-based) of the strand starting at position i + 1."""
        pos = list(range(self.n))          # pos[p] = strand currently at position p
        for g in self.word:
            pos[g - 1], pos[g] = pos[g], pos[g - 1]
        perm = [0] * self.n
        for p, strand in enumerate(pos):
            perm[strand] = p + 1
        return tuple(perm)

    def generator_positions(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for i, g in enumerate(self.word):
            out.setdefault(g, []).append(i)
        return out


def build_braid(D: YoungDiagram) -> LorenzBraid:
    r, c = D.height, D.width
    vertices = set()
    for col, h in enumerate(D.columns, 1):
        for row in range(1, h + 1):
            for dx in (0, 1):
                for dy in (0, 1):
                    vertices.add((col - 1 + dx, row - 1 + dy))
    # left to right at the top: row lines r..0, then column lines 0..c
    order = [("row", i) for i in range(r, -1, -1)] + [("col", j) for j in range(c + 1)]
    where = {s: p for p, s in enumerate(order)}
    word = []
    swept = sorted(vertices, key=lambda v: (v[0] + v[1], v[0] - v[1]))
    for x, y in swept:
        p, q = where[("row", y)], where[("col", x)]
        if q != p + 1:
            raise AssertionError(f"grid lines at vertex {(x, y)} are not adjacent")
        order[p], order[q] = order[q], order[p]
        where[order[p]], where[order[q]] = p, q
        word.append(p + 1)
    return LorenzBraid(n=r + c + 2, word=tuple(word), vertices=tuple(swept))


def closure_components(B: LorenzBraid) -> int:
    perm = B.permutation
    seen = [False] * B.n
    count = 0
    for start in range(B.n):
        if seen[start]:
            continue
        count += 1
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i] - 1
    return count
