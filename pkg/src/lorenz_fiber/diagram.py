"""Hanging Young diagrams and the Lorenz_{b,k} families.

A diagram is stored by its column lengths, left to right.  Cells use matrix
coordinates ``(row, col)``, both starting at 1, with row 1 along the corner
edge.  In hanging position the corner cell ``(1, 1)`` is on top.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

Cell = tuple[int, int]


class DiagramError(ValueError):
    """Invalid diagram input."""


class EmptyDiagram(DiagramError):
    pass


class NotAPartition(DiagramError):
    pass


@dataclass(frozen=True)
class YoungDiagram:
    columns: tuple[int, ...]

    def __post_init__(self):
        cols = tuple(int(c) for c in self.columns)
        if not cols:
            raise EmptyDiagram("columns must be non-empty")
        if any(c < 1 for c in cols):
            raise DiagramError("columns must be ≥ 1")
        for i in range(1, len(cols)):
            if cols[i] > cols[i - 1]:
                raise NotAPartition(
                    f"columns must be non-increasing: column {i + 1} ({cols[i]}) "
                    f"is longer than column {i} ({cols[i - 1]})")
        object.__setattr__(self, "columns", cols)

    @property
    def width(self) -> int:
        return len(self.columns)

    @property
    def height(self) -> int:
        return self.columns[0]

    @property
    def size(self) -> int:
        return sum(self.columns)

    @property
    def rows(self) -> tuple[int, ...]:
        """Row lengths, top to bottom."""
        return tuple(sum(1 for c in self.columns if c >= i) for i in range(1, self.height + 1))

    @cached_property
    def cells(self) -> frozenset[Cell]:
        return frozenset((row, col) for col, h in enumerate(self.columns, 1)
                         for row in range(1, h + 1))

    def __contains__(self, cell) -> bool:
        row, col = cell
        return 1 <= col <= self.width and 1 <= row <= self.columns[col - 1]

    def __len__(self) -> int:
        return self.size

    def transpose(self) -> YoungDiagram:
        return YoungDiagram(self.rows)

    def is_rectangle(self) -> bool:
        return self.columns[0] == self.columns[-1]

    def to_json(self) -> str:
        return json.dumps({"columns": list(self.columns)})

    @classmethod
    def from_json(cls, text: str) -> YoungDiagram:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DiagramError(f"invalid JSON: {exc}") from None
        if not isinstance(data, dict) or "columns" not in data:
            raise DiagramError('expected an object with a "columns" field')
        cols = data["columns"]
        if not isinstance(cols, list) or not all(isinstance(c, int) and not isinstance(c, bool)
                                                 for c in cols):
            raise DiagramError("columns must be a list of integers")
        return from_columns(cols)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.columns)) + "]"


def from_columns(cols: Sequence[int]) -> YoungDiagram:
    return YoungDiagram(tuple(cols))


def north(cell: Cell) -> Cell:
    """The neighbor the inverse monodromy moves an internal class to.

    This is the cell directly above in matrix coordinates; in the hanging
    picture it is the diagonal neighbor one step closer to the corner
    (the "North-West" cell of the internal-cell lemma).
    """
    row, col = cell
    return (row - 1, col)


@dataclass(frozen=True)
class CellClass:
    internal: dict[Cell, Cell]
    external: frozenset[Cell]

    def is_internal(self, cell: Cell) -> bool:
        return cell in self.internal


def classify_cells(D: YoungDiagram) -> CellClass:
    internal = {}
    external = set()
    for c in D.cells:
        nw = north(c)
        if nw in D:
            internal[c] = nw
        else:
            external.add(c)
    return CellClass(internal=internal, external=frozenset(external))


@dataclass(frozen=True)
class FamilyDecomposition:
    b: int
    l: int
    k: int
    mixing_cells: frozenset[Cell] = field(default_factory=frozenset)

    def mixing_diagram(self) -> YoungDiagram | None:
        """The mixing zone re-indexed as a diagram of its own (None when empty)."""
        if not self.mixing_cells:
            return None
        width = max(col for _, col in self.mixing_cells)
        cols = [sum(1 for _, c in self.mixing_cells if c == j) for j in range(1, width + 1)]
        return YoungDiagram(tuple(cols))


def decompose(D: YoungDiagram) -> FamilyDecomposition:
    b = D.width
    l = D.columns[-1]
    mixing = frozenset(c for c in D.cells if c[0] > l)
    return FamilyDecomposition(b=b, l=l, k=D.size - b * l, mixing_cells=mixing)


def _partitions_fitting(n: int, parts: int, largest: int) -> Iterator[tuple[int, ...]]:
    # partitions of n into at most `parts` parts, each <= largest, in
    # lexicographic order of the zero-padded tuple
    if n == 0:
        yield (0,) * parts
        return
    if parts == 0:
        return
    for first in range(1, min(n, largest) + 1):
        for rest in _partitions_fitting(n - first, parts - 1, first):
            yield (first,) + rest


def enumerate_family(b: int, k_max: int, l_min: int, l_max: int) -> Iterator[YoungDiagram]:
    """Diagrams of width b whose shortest column has length in [l_min, l_max]
    and whose mixing zone has at most k_max cells.

    Output is ordered by (l, k, columns).
    """
    if b < 1 or k_max < 0 or l_min < 1 or l_max < l_min:
        raise ValueError(f"invalid family parameters b={b} k_max={k_max} l={l_min}..{l_max}")
    for l in range(l_min, l_max + 1):
        for k in range(k_max + 1):
            # the last column carries no extra cells, so its length is exactly l
            for tail in _partitions_fitting(k, b - 1, k):
                yield YoungDiagram(tuple(l + t for t in tail) + (l,))


def _partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def enumerate_all(n_max: int) -> Iterator[YoungDiagram]:
    """Every diagram with at most n_max cells, by size then reverse-lexicographic columns."""
    if n_max < 1:
        raise ValueError("n_max must be ≥ 1")
    for n in range(1, n_max + 1):
        for p in _partitions(n, n):
            yield YoungDiagram(p)
