"""
Permutations of ``{1, ..., n}`` in one-line notation.

Everything is 1-indexed: ``w(i)`` is ``word[i - 1]``.

>>> w = parse_permutation("3142")
>>> w.word, inverse(w).word, length(w)
((3, 1, 4, 2), (2, 4, 1, 3), 3)
>>> rank(w, 3, 2)
1
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Optional, Sequence

__all__ = [
    "Permutation", "PermutationError", "parse_permutation", "identity",
    "all_permutations", "inverse", "length", "rank", "contains_pattern",
    "avoids", "is_vexillary", "permutation_matrix",
]


class PermutationError(ValueError):
    """Raised for malformed permutation text or non-bijective words."""


@dataclass(frozen=True)
class Permutation:
    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(v) for v in self.word)
        object.__setattr__(self, "word", word)
        n = len(word)
        if n < 1:
            raise PermutationError("a permutation needs at least one value")
        seen: dict[int, int] = {}
        for pos, v in enumerate(word, start=1):
            if not 1 <= v <= n:
                raise PermutationError(
                    f"value {v} at position {pos} is out of range 1..{n}")
            if v in seen:
                raise PermutationError(
                    f"value {v} at position {pos} repeats position {seen[v]}")
            seen[v] = pos

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(map(str, self.word))
        return ",".join(map(str, self.word))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"

    @cached_property
    def rank_table(self) -> tuple[tuple[int, ...], ...]:
        # rank_table[i][j] = r_{i,j}, with row/column 0 padded by zeros
        n = self.n
        table = [[0] * (n + 1) for _ in range(n + 1)]
        for i in range(1, n + 1):
            wi = self.word[i - 1]
            row, prev = table[i], table[i - 1]
            for j in range(1, n + 1):
                row[j] = prev[j] + (1 if wi <= j else 0)
        return tuple(tuple(r) for r in table)


def parse_permutation(text: str) -> Permutation:
    """
    Parse ``"3142"`` or ``"6,1,9,7,2,3,4,5,8"``.

    Digit strings are only accepted when every value is a single digit;
    anything with a value of 10 or more must be comma separated.
    """
    s = text.strip()
    if not s:
        raise PermutationError("empty permutation text")
    if "," in s:
        tokens = [t.strip() for t in s.split(",")]
    else:
        tokens = list(s)
    values = []
    for pos, tok in enumerate(tokens, start=1):
        if not tok.isdigit():
            raise PermutationError(f"malformed token {tok!r} at position {pos}")
        values.append(int(tok))
    return Permutation(tuple(values))


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n, in lexicographic order of the word."""
    for word in itertools.permutations(range(1, n + 1)):
        yield Permutation(word)


def inverse(w: Permutation) -> Permutation:
    inv = [0] * w.n
    for i, v in enumerate(w.word, start=1):
        inv[v - 1] = i
    return Permutation(tuple(inv))


def length(w: Permutation) -> int:
    """Number of inversions."""
    word = w.word
    return sum(1 for a, b in itertools.combinations(range(w.n), 2)
               if word[a] > word[b])


def rank(w: Permutation, i: int, j: int) -> int:
    """Number of 1s of the permutation matrix weakly northwest of ``(i, j)``.

    Row or column 0 is allowed and gives 0.
    """
    if not (0 <= i <= w.n and 0 <= j <= w.n):
        raise IndexError(f"cell ({i},{j}) outside [0,{w.n}]^2")
    return w.rank_table[i][j]


def contains_pattern(w: Permutation, u: Permutation | Sequence[int]
                     ) -> Optional[tuple[int, ...]]:
    """
    Return positions ``i_1 < ... < i_m`` (1-based) where ``w`` contains the
    pattern ``u``, or ``None`` if ``w`` avoids it.

    >>> contains_pattern(parse_permutation("13865742"), (1, 3, 4, 2))
    (1, 2, 3, 8)
    >>> contains_pattern(parse_permutation("2143"), (1, 3, 4, 2)) is None
    True
    """
    pattern = u.word if isinstance(u, Permutation) else tuple(u)
    m, word, n = len(pattern), w.word, w.n
    if m > n:
        return None
    chosen: list[int] = []

    def extend(start: int) -> bool:
        k = len(chosen)
        if k == m:
            return True
        pk = pattern[k]
        # leave room for the remaining m - k - 1 letters
        for pos in range(start, n - (m - k) + 1):
            v = word[pos]
            if all((pattern[t] < pk) == (word[chosen[t]] < v) for t in range(k)):
                chosen.append(pos)
                if extend(pos + 1):
                    return True
                chosen.pop()
        return False

    if extend(0):
        return tuple(p + 1 for p in chosen)
    return None


def avoids(w: Permutation, u: Permutation | Sequence[int]) -> bool:
    return contains_pattern(w, u) is None


def is_vexillary(w: Permutation) -> bool:
    """True iff ``w`` avoids 2143."""
    return contains_pattern(w, (2, 1, 4, 3)) is None


def permutation_matrix(w: Permutation) -> list[list[int]]:
    """0/1 matrix (as nested lists, 0-based storage) with ``M[i][w(i)] = 1``."""
    n = w.n
    return [[1 if w.word[i] == j + 1 else 0 for j in range(n)] for i in range(n)]
