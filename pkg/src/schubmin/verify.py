"""
Certificates for the elusive-minor claims.

* Minimality: every elusive minor is nonzero at a 0/1 point on its own
  antidiagonal, where every other essential minor vanishes.
* Generation: every essential minor reduces to zero modulo the elusive minors.
* Gröbner: initial monomials of non-elusive minors are divisible by initial
  monomials of elusive ones, and all S-polynomials of elusive pairs reduce
  to zero.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .diagram import essential_set
from .errors import InvariantViolation, LimitsExceeded, OrderGatingError
from .generators import Minor, _attends, elusive_minors, is_elusive, minor_key
from .perm import Permutation, is_vexillary
from .poly import (
    ANTIDIAGONAL, Monomial, Polynomial, TermOrder, initial_term,
    leading_monomial_of_minor, minor_polynomial,
)

__all__ = [
    "WitnessPoint", "MinimalityCertificate", "ReductionStep", "ReductionTrace",
    "BuchbergerLimits", "BuchbergerResult", "witness_point", "evaluate_minor",
    "certify_minor", "minimality_certificates", "reduce", "elusive_basis",
    "check_generation",
    "initial_term_cover", "s_polynomial", "buchberger_check", "check_order_gate",
]


@dataclass(frozen=True)
class WitnessPoint:
    n: int
    ones: tuple[tuple[int, int], ...]

    def __post_init__(self):
        rows = [i for i, _ in self.ones]
        cols = [j for _, j in self.ones]
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            raise ValueError("a witness point has at most one 1 per row and column")

    def entry(self, i: int, j: int) -> int:
        return 1 if (i, j) in self.ones else 0

    def matrix(self) -> list[list[int]]:
        return [[self.entry(i, j) for j in range(1, self.n + 1)]
                for i in range(1, self.n + 1)]

    def render(self) -> str:
        return "\n".join(" ".join(map(str, row)) for row in self.matrix()) + "\n"

    def to_json(self) -> list[list[int]]:
        return [[i, j] for i, j in self.ones]


@dataclass(frozen=True)
class MinimalityCertificate:
    minor: Minor
    point: WitnessPoint
    value_at_point: int
    vanishing_checked: int

    def to_json(self) -> dict:
        return {
            "minor": self.minor.to_json(),
            "witness": self.point.to_json(),
            "value": self.value_at_point,
            "vanishing_checked": self.vanishing_checked,
        }


def witness_point(m: Minor, w: Permutation) -> WitnessPoint:
    """1s at ``(i_t, j_{r+2-t})``: the antidiagonal of ``m``."""
    if not is_elusive(m, w):
        raise ValueError(f"{m} is not elusive for {w}; its witness would be unsound")
    return WitnessPoint(w.n, tuple(sorted(zip(m.I, reversed(m.J)))))


def _int_det(rows: list[list[int]]) -> int:
    # cofactor expansion along the first row, skipping zero entries
    k = len(rows)
    if k == 0:
        return 1
    if k == 1:
        return rows[0][0]
    total = 0
    for c, a in enumerate(rows[0]):
        if a:
            sub = [r[:c] + r[c + 1:] for r in rows[1:]]
            total += (-a if c % 2 else a) * _int_det(sub)
    return total


def evaluate_minor(m: Minor, p: WitnessPoint) -> int:
    return _int_det([[p.entry(i, j) for j in m.J] for i in m.I])


def certify_minor(m: Minor, w: Permutation, essential: Sequence[Minor] | None = None
                  ) -> MinimalityCertificate:
    """Check one elusive minor against its witness point."""
    p = witness_point(m, w)
    if essential is None:
        essential = [em.minor for em in elusive_minors(w).essential]
    value = evaluate_minor(m, p)
    if value not in (1, -1):
        raise InvariantViolation(
            f"{m} evaluates to {value} at its own witness point",
            {"w": list(w.word), "minor": m.to_json(), "witness": p.to_json()})
    checked = 0
    for other in essential:
        if other == m:
            continue
        v = evaluate_minor(other, p)
        if v:
            raise InvariantViolation(
                f"essential minor {other} does not vanish at the witness of {m}",
                {"w": list(w.word), "minor": m.to_json(), "witness": p.to_json(),
                 "nonvanishing": other.to_json(), "value": v})
        checked += 1
    return MinimalityCertificate(m, p, value, checked)


def minimality_certificates(w: Permutation) -> list[MinimalityCertificate]:
    gens = elusive_minors(w)
    essential = [em.minor for em in gens.essential]
    return [certify_minor(m, w, essential) for m in gens.elusive]


@dataclass(frozen=True)
class ReductionStep:
    basis_index: int
    multiplier: Monomial
    coefficient: int


@dataclass
class ReductionTrace:
    dividend: Polynomial
    basis: tuple[Polynomial, ...]
    steps: list[ReductionStep] = field(default_factory=list)
    remainder: Polynomial = field(default_factory=Polynomial)

    def reconstruct(self) -> Polynomial:
        """``sum(coefficient * multiplier * basis[k]) + remainder``."""
        total = self.remainder
        for s in self.steps:
            total = total + self.basis[s.basis_index].scale(s.coefficient, s.multiplier)
        return total

    def to_json(self, order: TermOrder = ANTIDIAGONAL) -> dict:
        return {
            "dividend": self.dividend.render(order),
            "steps": [{"basis_index": s.basis_index,
                       "multiplier": str(s.multiplier),
                       "coefficient": s.coefficient} for s in self.steps],
            "remainder": self.remainder.render(order),
        }


def reduce(f: Polynomial, basis: Sequence[Polynomial], order: TermOrder
           ) -> ReductionTrace:
    """Multivariate division of ``f`` by ``basis``.

    Every basis element must have initial coefficient ±1, so all quotients
    stay integral. The first basis element (in list order) whose initial
    monomial divides the current leading monomial is used.
    """
    basis = tuple(basis)
    leads = []
    for g in basis:
        lm, lc = initial_term(g, order)
        if lc not in (1, -1):
            raise ValueError(f"basis element {g} has initial coefficient {lc}")
        leads.append((lm, lc))
    trace = ReductionTrace(f, basis)
    p = f
    rem: dict[Monomial, int] = {}
    while p:
        lm, lc = initial_term(p, order)
        for k, (glm, glc) in enumerate(leads):
            if glm.divides(lm):
                q = lc * glc  # lc / glc, as glc is ±1
                mult = lm / glm
                p = p - basis[k].scale(q, mult)
                trace.steps.append(ReductionStep(k, mult, q))
                break
        else:
            rem[lm] = lc
            p = p - Polynomial.monomial(lm, lc)
    trace.remainder = Polynomial(rem)
    return trace


def elusive_basis(w: Permutation) -> tuple[list[Minor], list[Polynomial]]:
    minors = list(elusive_minors(w).elusive)
    return minors, [minor_polynomial(m) for m in minors]


def check_generation(w: Permutation, order: TermOrder = ANTIDIAGONAL) -> list[Minor]:
    """Essential minors whose remainder modulo the elusive basis is nonzero."""
    gens = elusive_minors(w)
    basis = [minor_polynomial(m) for m in gens.elusive]
    bad = []
    for em in gens.essential:
        trace = reduce(minor_polynomial(em.minor), basis, order)
        if trace.remainder:
            bad.append(em.minor)
    return bad


def check_order_gate(w: Permutation, order: TermOrder, force: bool = False) -> None:
    if order.kind == "diagonal" and not force and not is_vexillary(w):
        raise OrderGatingError(
            f"{w} is not vexillary (contains 2143); the diagonal-order claim "
            "only covers vexillary permutations")


def _chain_cover(m: Minor, w: Permutation, order: TermOrder, ess, elusive: set
                 ) -> Optional[Minor]:
    # Follow the inductive construction: shrink to a minor of an attended
    # lower-rank essential cell whose initial term divides ours.
    current = m
    while current not in elusive:
        s = current.size
        step = None
        for e in ess:
            (i2, j2), r2 = e
            if r2 >= s - 1 or not _attends(current.I, current.J, i2, j2, r2):
                continue
            k = r2 + 1
            rows_in = sum(1 for a in current.I if a <= i2)
            cols_in = sum(1 for b in current.J if b <= j2)
            if order.kind == "antidiagonal":
                if rows_in > r2 and cols_in == s:
                    step = Minor(current.I[:k], current.J[-k:])
                else:
                    step = Minor(current.I[-k:], current.J[:k])
            else:
                step = Minor(current.I[:k], current.J[:k])
            break
        if step is None:
            return None
        current = step
    return current


def initial_term_cover(w: Permutation, order: TermOrder = ANTIDIAGONAL,
                       force: bool = False) -> dict[Minor, Minor]:
    """
    Map each non-elusive essential minor to an elusive minor whose initial
    monomial divides its initial monomial.
    """
    check_order_gate(w, order, force)
    gens = elusive_minors(w)
    elusive = set(gens.elusive)
    ess = essential_set(w)
    lead = {m: leading_monomial_of_minor(m, order) for m in elusive}
    cover: dict[Minor, Minor] = {}
    for em in gens.essential:
        m = em.minor
        if m in elusive:
            continue
        mlead = leading_monomial_of_minor(m, order)
        found = _chain_cover(m, w, order, ess, elusive)
        if found is None or not lead[found].divides(mlead):
            found = next((e for e in gens.elusive if lead[e].divides(mlead)), None)
        if found is None:
            raise InvariantViolation(
                f"no elusive minor's initial term divides that of {m}",
                {"w": list(w.word), "order": order.kind, "minor": m.to_json()})
        cover[m] = found
    return cover


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder) -> Polynomial:
    lf, cf = initial_term(f, order)
    lg, cg = initial_term(g, order)
    lcm = lf.lcm(lg)
    return f.scale(cg, lcm / lf) - g.scale(cf, lcm / lg)


@dataclass(frozen=True)
class BuchbergerLimits:
    max_n: int = 6
    max_basis: int = 250


@dataclass
class BuchbergerResult:
    w: Permutation
    order: TermOrder
    basis_size: int
    pairs_total: int
    pairs_skipped: int
    failure: Optional[tuple[Minor, Minor, Polynomial]] = None

    @property
    def passed(self) -> bool:
        return self.failure is None

    def to_json(self) -> dict:
        out = {
            "w": list(self.w.word),
            "order": self.order.kind,
            "basis_size": self.basis_size,
            "pairs_total": self.pairs_total,
            "pairs_skipped_coprime": self.pairs_skipped,
            "passed": self.passed,
        }
        if self.failure is not None:
            a, b, rem = self.failure
            out["failure"] = {"pair": [a.to_json(), b.to_json()],
                              "remainder": rem.render(self.order)}
        return out


def buchberger_check(w: Permutation, order: TermOrder = ANTIDIAGONAL,
                     limits: BuchbergerLimits = BuchbergerLimits(),
                     force: bool = False) -> BuchbergerResult:
    """
    Check that every S-polynomial of two elusive minors reduces to zero
    modulo the (fixed) elusive basis. Pairs with coprime initial monomials
    are skipped.
    """
    check_order_gate(w, order, force)
    if w.n > limits.max_n:
        raise LimitsExceeded(f"n={w.n} exceeds the Buchberger limit {limits.max_n}")
    minors, basis = elusive_basis(w)
    if len(basis) > limits.max_basis:
        raise LimitsExceeded(
            f"{len(basis)} elusive minors exceed the basis limit {limits.max_basis}")
    leads = [initial_term(g, order)[0] for g in basis]
    result = BuchbergerResult(w, order, len(basis), 0, 0)
    for a, b in itertools.combinations(range(len(basis)), 2):
        result.pairs_total += 1
        if leads[a].coprime(leads[b]):
            result.pairs_skipped += 1
            continue
        rem = reduce(s_polynomial(basis[a], basis[b], order), basis, order).remainder
        if rem:
            pair = sorted((minors[a], minors[b]), key=minor_key)
            result.failure = (pair[0], pair[1], rem)
            break
    return result
