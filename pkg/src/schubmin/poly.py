"""
Sparse integer polynomials in the generic-matrix variables ``x[i,j]``.

Coefficients are Python ints, so arithmetic is exact at any size. A
:class:`Monomial` is a sorted tuple of ``((i, j), exponent)`` pairs with no
zero exponents; a :class:`Polynomial` maps monomials to nonzero ints.

Two pure lexicographic orders are provided. ``antidiagonal`` reads the
generic matrix row by row from the top, right to left inside each row, so
``x[1,n]`` is the largest variable; it selects the antidiagonal term of every
minor. ``diagonal`` reads each row left to right and selects diagonal terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

__all__ = [
    "Monomial", "Polynomial", "TermOrder", "ANTIDIAGONAL", "DIAGONAL",
    "var", "minor_polynomial", "compare", "initial_term",
    "antidiagonal_monomial", "diagonal_monomial", "leading_monomial_of_minor",
]

Variable = tuple[int, int]


@dataclass(frozen=True, order=False)
class Monomial:
    exps: tuple[tuple[Variable, int], ...] = ()

    @classmethod
    def from_dict(cls, d: Mapping[Variable, int]) -> "Monomial":
        return cls(tuple(sorted((tuple(v), e) for v, e in d.items() if e)))

    @classmethod
    def of(cls, *variables: Variable) -> "Monomial":
        d: dict[Variable, int] = {}
        for v in variables:
            d[tuple(v)] = d.get(tuple(v), 0) + 1
        return cls.from_dict(d)

    def as_dict(self) -> dict[Variable, int]:
        return dict(self.exps)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    def variables(self) -> list[Variable]:
        return [v for v, _ in self.exps]

    def __mul__(self, other: "Monomial") -> "Monomial":
        d = self.as_dict()
        for v, e in other.exps:
            d[v] = d.get(v, 0) + e
        return Monomial.from_dict(d)

    def divides(self, other: "Monomial") -> bool:
        d = other.as_dict()
        return all(d.get(v, 0) >= e for v, e in self.exps)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        d = self.as_dict()
        for v, e in other.exps:
            d[v] -= e
        return Monomial.from_dict(d)

    def lcm(self, other: "Monomial") -> "Monomial":
        d = self.as_dict()
        for v, e in other.exps:
            d[v] = max(d.get(v, 0), e)
        return Monomial.from_dict(d)

    def coprime(self, other: "Monomial") -> bool:
        return not set(self.variables()) & set(other.variables())

    def __str__(self) -> str:
        if not self.exps:
            return "1"
        parts = []
        for (i, j), e in self.exps:
            parts.append(f"x[{i},{j}]" if e == 1 else f"x[{i},{j}]^{e}")
        return "*".join(parts)


ONE = Monomial()


@dataclass(frozen=True)
class TermOrder:
    kind: str
    n: int = 0

    def __post_init__(self):
        if self.kind not in ("antidiagonal", "diagonal"):
            raise ValueError(f"unknown term order {self.kind!r}")

    def precedence(self, v: Variable) -> tuple[int, int]:
        """Sort key of a variable; smaller key means larger variable."""
        i, j = v
        return (i, -j) if self.kind == "antidiagonal" else (i, j)

    def key(self, m: Monomial) -> tuple:
        """Sort key agreeing with this term order."""
        items = sorted((self.precedence(v), e) for v, e in m.exps)
        return _LexKey(tuple(items))

    def sorted_desc(self, monomials: Iterable[Monomial]) -> list[Monomial]:
        return sorted(monomials, key=self.key, reverse=True)


class _LexKey:
    # items: (precedence, exponent) pairs, largest variable first
    __slots__ = ("items",)

    def __init__(self, items):
        self.items = items

    def _cmp(self, other: "_LexKey") -> int:
        a, b = self.items, other.items
        for (pa, ea), (pb, eb) in zip(a, b):
            if pa != pb:
                # the one holding the larger variable is bigger
                return 1 if pa < pb else -1
            if ea != eb:
                return 1 if ea > eb else -1
        if len(a) != len(b):
            return 1 if len(a) > len(b) else -1
        return 0

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __eq__(self, other):
        return self._cmp(other) == 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __ge__(self, other):
        return self._cmp(other) >= 0


ANTIDIAGONAL = TermOrder("antidiagonal")
DIAGONAL = TermOrder("diagonal")


def compare(order: TermOrder, a: Monomial, b: Monomial) -> int:
    """-1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    return order.key(a)._cmp(order.key(b))


class Polynomial:
    """Immutable sparse polynomial with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self._terms = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls({ONE: c})

    @classmethod
    def monomial(cls, m: Monomial, c: int = 1) -> "Polynomial":
        return cls({m: c})

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, m: Monomial) -> int:
        return self._terms.get(m, 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial.constant(other)
        if isinstance(other, Monomial):
            return Polynomial.monomial(other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def scale(self, c: int, m: Monomial = ONE) -> "Polynomial":
        """``c * m * self``."""
        if m == ONE:
            return Polynomial({t: c * a for t, a in self._terms.items()})
        return Polynomial({t * m: c * a for t, a in self._terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, Monomial):
            return self.scale(1, other)
        other = self._coerce(other)
        out: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(out)

    __rmul__ = __mul__

    def evaluate(self, point: Mapping[Variable, int]) -> int:
        """Value at a point given as ``{(i, j): value}``; missing entries are 0."""
        total = 0
        for m, c in self._terms.items():
            val = c
            for v, e in m.exps:
                val *= point.get(v, 0) ** e
                if not val:
                    break
            total += val
        return total

    def initial(self, order: TermOrder) -> tuple[Monomial, int]:
        return initial_term(self, order)

    def render(self, order: TermOrder = ANTIDIAGONAL) -> str:
        """``"x[1,1]*x[2,2] - x[1,2]*x[2,1]"`` style, largest term first."""
        if not self._terms:
            return "0"
        out = []
        for k, m in enumerate(order.sorted_desc(self._terms)):
            c = self._terms[m]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if m == ONE:
                body = str(mag)
            elif mag == 1:
                body = str(m)
            else:
                body = f"{mag}*{m}"
            if k == 0:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Polynomial({self.render()!r})"


def var(i: int, j: int) -> Polynomial:
    return Polynomial.monomial(Monomial.of((i, j)))


def initial_term(f: Polynomial, order: TermOrder) -> tuple[Monomial, int]:
    if f.is_zero():
        raise ValueError("the zero polynomial has no initial term")
    m = max(f, key=order.key)
    return m, f.coefficient(m)


@lru_cache(maxsize=None)
def _det(rows: tuple[int, ...], cols: tuple[int, ...]) -> Polynomial:
    # Laplace expansion along the first row, memoized on (rows, cols)
    if len(rows) == 1:
        return var(rows[0], cols[0])
    first, rest = rows[0], rows[1:]
    out: dict[Monomial, int] = {}
    for k, c in enumerate(cols):
        sign = -1 if k % 2 else 1
        x = Monomial.of((first, c))
        for m, coef in _det(rest, cols[:k] + cols[k + 1:]).items():
            mm = m * x
            out[mm] = out.get(mm, 0) + sign * coef
    return Polynomial(out)


def minor_polynomial(m) -> Polynomial:
    """Symbolic determinant of the generic submatrix with rows ``m.I``, columns ``m.J``."""
    I, J = tuple(m[0]), tuple(m[1])
    if len(I) != len(J):
        raise ValueError("minor must be square")
    return _det(I, J)


def antidiagonal_monomial(m) -> Monomial:
    I, J = m[0], m[1]
    return Monomial.of(*zip(I, reversed(J)))


def diagonal_monomial(m) -> Monomial:
    I, J = m[0], m[1]
    return Monomial.of(*zip(I, J))


def leading_monomial_of_minor(m, order: TermOrder) -> Monomial:
    if order.kind == "antidiagonal":
        return antidiagonal_monomial(m)
    return diagonal_monomial(m)
