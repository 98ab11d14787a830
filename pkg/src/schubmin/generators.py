"""
Essential minors, the attends relation, and elusive minors.

A minor ``m_{I,J}`` is named by its row set ``I`` and column set ``J``, both
strictly increasing tuples of 1-based indices. The elusive minors of ``w``
minimally generate its Schubert determinantal ideal.

>>> from schubmin.perm import parse_permutation
>>> gens = elusive_minors(parse_permutation("619723458"))
>>> gens.degree_histogram
{1: 5, 2: 30, 3: 16}
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .diagram import Cell, EssentialCell, essential_set, rothe_diagram
from .perm import Permutation, rank

__all__ = [
    "Minor", "EssentialMinor", "GeneratorSet", "NotEssentialError",
    "minor", "minor_key", "essential_minors", "belongs_to", "attends",
    "attended_cells", "is_elusive", "elusive_minors", "canonical_elusive_at",
    "se_corner", "shift",
]


class NotEssentialError(ValueError):
    """The minor is not an essential minor of the given permutation."""


class Minor(NamedTuple):
    I: tuple[int, ...]
    J: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.I)

    def transpose(self) -> "Minor":
        return Minor(self.J, self.I)

    def to_json(self) -> dict:
        return {"I": list(self.I), "J": list(self.J)}

    def __str__(self) -> str:
        rows = ",".join(map(str, self.I))
        cols = ",".join(map(str, self.J))
        return f"m_{{{{{rows}}},{{{cols}}}}}"


def minor(I: Iterable[int], J: Iterable[int]) -> Minor:
    """Build a validated minor from row and column indices."""
    I, J = tuple(I), tuple(J)
    if len(I) != len(J) or not I:
        raise ValueError(f"row and column sets must be equal and nonempty: {I}, {J}")
    for name, idx in (("row", I), ("column", J)):
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise ValueError(f"{name} indices must be strictly increasing: {idx}")
        if idx[0] < 1:
            raise ValueError(f"{name} indices are 1-based: {idx}")
    return Minor(I, J)


def minor_key(m: Minor):
    """Canonical order: size, then rows, then columns."""
    return (len(m.I), m.I, m.J)


class EssentialMinor(NamedTuple):
    minor: Minor
    cells: tuple[EssentialCell, ...]


@dataclass(frozen=True)
class GeneratorSet:
    w: Permutation
    essential: tuple[EssentialMinor, ...]
    elusive: tuple[Minor, ...]

    @property
    def degree_histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(m.size for m in self.elusive).items()))

    def to_json(self) -> dict:
        return {
            "w": list(self.w.word),
            "essential_count": len(self.essential),
            "elusive": [m.to_json() for m in self.elusive],
            "histogram": {str(k): v for k, v in self.degree_histogram.items()},
        }


def essential_minors(w: Permutation) -> list[EssentialMinor]:
    """All minors belonging to some essential cell, merged and sorted."""
    owners: dict[Minor, list[EssentialCell]] = {}
    for e in essential_set(w):
        (i, j), r = e
        for I in itertools.combinations(range(1, i + 1), r + 1):
            for J in itertools.combinations(range(1, j + 1), r + 1):
                owners.setdefault(Minor(I, J), []).append(e)
    return [EssentialMinor(m, tuple(owners[m])) for m in sorted(owners, key=minor_key)]


def belongs_to(m: Minor, e: EssentialCell) -> bool:
    (i, j), r = e
    return (m.size == r + 1 and len(m.J) == r + 1
            and m.I[-1] <= i and m.J[-1] <= j)


def _count_at_most(idx: Sequence[int], bound: int) -> int:
    # idx is sorted, so this is a bisect; sizes are tiny
    return sum(1 for a in idx if a <= bound)


def _attends(I, J, i2: int, j2: int, r2: int) -> bool:
    s = len(I)
    a = _count_at_most(I, i2)
    b = _count_at_most(J, j2)
    return (a > r2 and b == s) or (a == s and b > r2)


def attends(m: Minor, target: Cell | tuple[int, int], w: Permutation) -> bool:
    """
    Whether ``m`` attends the northwest submatrix ``M^{[i',j']}``.

    The size condition uses the minor's own size ``|I|``, which equals
    ``r_{i,j} + 1`` for every essential cell the minor belongs to.
    """
    i2, j2 = target
    if not (1 <= i2 <= w.n and 1 <= j2 <= w.n):
        raise IndexError(f"target ({i2},{j2}) outside [1,{w.n}]^2")
    return _attends(m.I, m.J, i2, j2, rank(w, i2, j2))


def _lower_rank_essentials(ess: Sequence[EssentialCell], size: int):
    return [(c.i, c.j, r) for c, r in ess if r < size - 1]


def attended_cells(m: Minor, w: Permutation) -> list[EssentialCell]:
    """Lower-rank essential cells that ``m`` attends (empty iff elusive)."""
    return [e for e in essential_set(w)
            if e.rank < m.size - 1 and _attends(m.I, m.J, e.cell.i, e.cell.j, e.rank)]


def _is_essential(m: Minor, ess: Sequence[EssentialCell]) -> bool:
    return any(belongs_to(m, e) for e in ess)


def is_elusive(m: Minor, w: Permutation) -> bool:
    ess = essential_set(w)
    if not _is_essential(m, ess):
        raise NotEssentialError(f"{m} is not an essential minor of {w}")
    return not any(_attends(m.I, m.J, i2, j2, r2)
                   for i2, j2, r2 in _lower_rank_essentials(ess, m.size))


def elusive_minors(w: Permutation) -> GeneratorSet:
    essential = essential_minors(w)
    ess = essential_set(w)
    lower_by_size: dict[int, list] = {}
    elusive = []
    for em in essential:
        m = em.minor
        lower = lower_by_size.get(m.size)
        if lower is None:
            lower = lower_by_size[m.size] = _lower_rank_essentials(ess, m.size)
        if not any(_attends(m.I, m.J, i2, j2, r2) for i2, j2, r2 in lower):
            elusive.append(m)
    return GeneratorSet(w, tuple(essential), tuple(elusive))


def canonical_elusive_at(b: Cell | tuple[int, int], w: Permutation) -> Minor:
    """The contiguous minor with rows ``[i-r, i]`` and columns ``[j-r, j]``.

    Here ``r`` is the rank at the diagram cell ``b``; this minor is always
    elusive.
    """
    b = Cell(*b)
    if b not in rothe_diagram(w):
        raise ValueError(f"{tuple(b)} is not a cell of the Rothe diagram of {w}")
    r = rank(w, b.i, b.j)
    return Minor(tuple(range(b.i - r, b.i + 1)), tuple(range(b.j - r, b.j + 1)))


def se_corner(m: Minor) -> Cell:
    return Cell(m.I[-1], m.J[-1])


def shift(m: Minor, axis: str, src: int, dst: int, n: int | None = None) -> Minor:
    """
    Replace index ``src`` by a larger unused index ``dst`` in the row set
    (``axis="rows"``) or column set (``axis="columns"``).

    >>> shift(Minor((2, 3), (1, 2)), "rows", 2, 4)
    Minor(I=(3, 4), J=(1, 2))
    """
    if axis not in ("rows", "columns"):
        raise ValueError(f"axis must be 'rows' or 'columns', not {axis!r}")
    idx = m.I if axis == "rows" else m.J
    if src not in idx:
        raise ValueError(f"{src} is not among the {axis} of {m}")
    if dst <= src:
        raise ValueError(f"shift target {dst} must exceed {src}")
    if dst in idx:
        raise ValueError(f"{dst} is already among the {axis} of {m}")
    if n is not None and dst > n:
        raise ValueError(f"shift target {dst} exceeds ambient size {n}")
    new = tuple(sorted((set(idx) - {src}) | {dst}))
    return Minor(new, m.J) if axis == "rows" else Minor(m.I, new)
