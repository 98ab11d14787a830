"""Per-permutation analysis reports (JSON and human-readable)."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .ci import CiVerdict, ci_verdict
from .diagram import Diagram, EssentialCell, ascii_render, essential_set, rothe_diagram
from .generators import GeneratorSet, elusive_minors
from .perm import Permutation, length
from .verify import MinimalityCertificate, minimality_certificates

__all__ = ["AnalysisReport", "analyze", "dumps"]


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, UTF-8 text, one line."""
    return json.dumps(obj, sort_keys=True, ensure_ascii=False)


@dataclass(frozen=True)
class AnalysisReport:
    w: Permutation
    length: int
    diagram: Diagram
    essential: tuple[EssentialCell, ...]
    generators: GeneratorSet
    ci: CiVerdict
    certificates: Optional[tuple[MinimalityCertificate, ...]] = None

    def to_json(self) -> dict:
        out = {
            "permutation": list(self.w.word),
            "length": self.length,
            "diagram": self.diagram.to_json(),
            "essential_set": [{"cell": [c.i, c.j], "rank": r} for c, r in self.essential],
            "essential_count": len(self.generators.essential),
            "elusive": [m.to_json() for m in self.generators.elusive],
            "elusive_count": len(self.generators.elusive),
            "histogram": {str(k): v for k, v in self.generators.degree_histogram.items()},
            "ci": self.ci.to_json(),
        }
        if self.certificates is not None:
            out["certificates"] = [c.to_json() for c in self.certificates]
        return out

    def render(self) -> str:
        gens = self.generators
        lines = [f"w = {self.w}    n = {self.w.n}    length = {self.length}", ""]
        lines.append(ascii_render(self.w).rstrip("\n"))
        lines.append("")
        ess = ", ".join(f"({c.i},{c.j}) r={r}" for c, r in self.essential) or "none"
        lines.append(f"essential set: {ess}")
        lines.append(f"essential minors: {len(gens.essential)}")
        lines.append(f"elusive minors:   {len(gens.elusive)}")
        lines.append("")
        lines.append("degree  generators")
        for deg, count in gens.degree_histogram.items():
            lines.append(f"{deg:>6}  {count:>10}")
        lines.append("")
        lines.append("minimal generators:")
        for m in gens.elusive:
            lines.append(f"  {m}")
        ci = self.ci
        lines.append("")
        lines.append(f"complete intersection (count {ci.elusive_count} vs length "
                     f"{ci.length}): {ci.by_count}")
        wit = ""
        if ci.pattern_witness:
            pat = "".join(map(str, ci.pattern_witness["pattern"]))
            pos = ",".join(map(str, ci.pattern_witness["positions"]))
            wit = f"  [contains {pat} at positions {pos}]"
        lines.append(f"complete intersection (pattern fast path): {ci.by_pattern}{wit}")
        if self.certificates is not None:
            lines.append("")
            lines.append("minimality certificates:")
            for c in self.certificates:
                lines.append(f"  {c.minor}: value {c.value_at_point:+d} at witness "
                             f"{c.point.to_json()}, {c.vanishing_checked} others vanish")
        return "\n".join(lines) + "\n"


def analyze(w: Permutation, certificates: bool = False) -> AnalysisReport:
    certs = tuple(minimality_certificates(w)) if certificates else None
    return AnalysisReport(
        w=w,
        length=length(w),
        diagram=rothe_diagram(w),
        essential=tuple(essential_set(w)),
        generators=elusive_minors(w),
        ci=ci_verdict(w),
        certificates=certs,
    )
