"""Rothe diagrams, essential sets and their connected components."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .perm import Permutation, inverse, rank

__all__ = [
    "Cell", "Diagram", "EssentialCell", "rothe_diagram", "essential_set",
    "connected_components", "ascii_render",
]


class Cell(NamedTuple):
    i: int
    j: int

    def transpose(self) -> "Cell":
        return Cell(self.j, self.i)


class EssentialCell(NamedTuple):
    cell: Cell
    rank: int


@dataclass(frozen=True)
class Diagram:
    n: int
    cells: frozenset[Cell]

    def __contains__(self, cell) -> bool:
        return cell in self.cells

    def __len__(self) -> int:
        return len(self.cells)

    def sorted_cells(self) -> list[Cell]:
        return sorted(self.cells)

    def transpose(self) -> "Diagram":
        return Diagram(self.n, frozenset(c.transpose() for c in self.cells))

    def to_json(self) -> list[list[int]]:
        return [[c.i, c.j] for c in self.sorted_cells()]


def rothe_diagram(w: Permutation) -> Diagram:
    """Cells ``(i, j)`` with ``j < w(i)`` and ``i < w^{-1}(j)``."""
    winv = inverse(w)
    n = w.n
    cells = frozenset(
        Cell(i, j)
        for i in range(1, n + 1)
        for j in range(1, w(i))
        if i < winv(j)
    )
    return Diagram(n, cells)


def essential_set(w: Permutation) -> list[EssentialCell]:
    """Southeast corners of the diagram with their ranks, row-major order."""
    d = rothe_diagram(w)
    return [
        EssentialCell(c, rank(w, c.i, c.j))
        for c in d.sorted_cells()
        if Cell(c.i + 1, c.j) not in d and Cell(c.i, c.j + 1) not in d
    ]


def connected_components(d: Diagram) -> list[list[Cell]]:
    """Edge-adjacency components, each sorted, ordered by their first cell."""
    remaining = set(d.cells)
    components = []
    for start in d.sorted_cells():
        if start not in remaining:
            continue
        remaining.discard(start)
        stack, comp = [start], []
        while stack:
            c = stack.pop()
            comp.append(c)
            for nb in (Cell(c.i + 1, c.j), Cell(c.i - 1, c.j),
                       Cell(c.i, c.j + 1), Cell(c.i, c.j - 1)):
                if nb in remaining:
                    remaining.discard(nb)
                    stack.append(nb)
        components.append(sorted(comp))
    return components


SHADE = "■"
DOT = "●"
BLANK = "□"


def ascii_render(w: Permutation) -> str:
    """
    Text picture of the Rothe diagram: ``■`` for diagram cells, ``●`` for the
    1s of the permutation matrix and ``□`` elsewhere. Row 1 is printed first.
    """
    d = rothe_diagram(w)
    n = w.n
    width = len(str(n))
    header = " " * (width + 1) + " ".join(str(j % 10) for j in range(1, n + 1))
    lines = [header]
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if w(i) == j:
                row.append(DOT)
            elif Cell(i, j) in d:
                row.append(SHADE)
            else:
                row.append(BLANK)
        lines.append(f"{i:>{width}} " + " ".join(row))
    return "\n".join(lines) + "\n"
