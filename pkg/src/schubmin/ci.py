"""
Complete-intersection tests for matrix Schubert varieties.

``is_ci_by_count`` is the ground truth: the elusive minors are a minimal
generating set, so the variety is a complete intersection exactly when there
are ``length(w)`` of them. ``is_ci_by_pattern`` is the fast path (avoid
1342, 1432 and 1423); :func:`cross_check` validates it against the count
exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Optional

from .errors import InvariantViolation, LimitsExceeded
from .generators import elusive_minors
from .perm import Permutation, all_permutations, contains_pattern, length

__all__ = [
    "CI_PATTERNS", "LONGER_PATTERNS", "CiVerdict", "is_ci_by_count",
    "is_ci_by_pattern", "ci_verdict", "cross_check",
]

CI_PATTERNS = ((1, 3, 4, 2), (1, 4, 3, 2), (1, 4, 2, 3))
# listed elsewhere in the literature; implied by CI_PATTERNS
LONGER_PATTERNS = ((3, 1, 5, 2, 4), (2, 4, 1, 5, 3), (3, 5, 1, 6, 2, 4))

MAX_CROSS_CHECK_N = 7


@dataclass(frozen=True)
class CiVerdict:
    by_count: bool
    by_pattern: bool
    elusive_count: int
    length: int
    pattern_witness: Optional[dict] = None

    def to_json(self) -> dict:
        return {
            "by_count": self.by_count,
            "by_pattern": self.by_pattern,
            "elusive_count": self.elusive_count,
            "length": self.length,
            "pattern_witness": self.pattern_witness,
        }


def is_ci_by_count(w: Permutation) -> tuple[bool, int, int]:
    count = len(elusive_minors(w).elusive)
    ell = length(w)
    return count == ell, count, ell


def _first_containment(w: Permutation, patterns) -> Optional[dict]:
    for u in patterns:
        emb = contains_pattern(w, u)
        if emb is not None:
            return {"pattern": list(u), "positions": list(emb)}
    return None


def is_ci_by_pattern(w: Permutation) -> tuple[bool, Optional[dict]]:
    """
    Avoidance of 1342, 1432, 1423. On failure the witness names the pattern
    and the 1-based positions of an occurrence.
    """
    witness = _first_containment(w, CI_PATTERNS)
    return witness is None, witness


def ci_verdict(w: Permutation) -> CiVerdict:
    by_count, count, ell = is_ci_by_count(w)
    by_pattern, witness = is_ci_by_pattern(w)
    return CiVerdict(by_count, by_pattern, count, ell, witness)


def _check_one(w: Permutation) -> tuple[bool, bool, bool]:
    by_count, _, _ = is_ci_by_count(w)
    by_pattern, _ = is_ci_by_pattern(w)
    footnote_ok = not by_pattern or _first_containment(w, LONGER_PATTERNS) is None
    return by_count, by_pattern, footnote_ok


def cross_check(n: int, max_n: int = MAX_CROSS_CHECK_N, strict: bool = False) -> dict:
    """
    Compare both deciders over all of S_n and check that avoiding the three
    size-4 patterns forces avoiding 31524, 24153 and 351624.

    Returns ``{"n", "total", "ci_count", "disagreements", "footnote_violations"}``
    with offending permutations as word lists. With ``strict`` any offender
    raises :class:`InvariantViolation` instead.
    """
    if not 1 <= n <= max_n:
        raise LimitsExceeded(f"cross_check needs 1 <= n <= {max_n}, got {n}")
    ci_count = 0
    disagreements = []
    footnote = []
    total = 0
    for w in all_permutations(n):
        total += 1
        by_count, by_pattern, footnote_ok = _check_one(w)
        ci_count += by_count
        if by_count != by_pattern:
            disagreements.append(list(w.word))
        if not footnote_ok:
            footnote.append(list(w.word))
    assert total == factorial(n)
    report = {
        "n": n,
        "total": total,
        "ci_count": ci_count,
        "disagreements": disagreements,
        "footnote_violations": footnote,
    }
    if strict and (disagreements or footnote):
        raise InvariantViolation(
            f"complete-intersection deciders disagree on S_{n}", report)
    return report
