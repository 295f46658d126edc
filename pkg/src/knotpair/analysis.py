"""
Per-knot pipeline: Seifert data, both Blanchfield Grams, coloring basis,
weight Gram, alpha, verdict and the comparison with the expected value.
"""

import time
from dataclasses import dataclass, field

from .alpha import alpha_extract, alpha_classify, match_expected
from .diagram import coloring_generators, weight_gram, diagram_alexander
from .quotient import Modulus
from .seifert import blanchfield_gram, cbl_gram

__all__ = ["KnotReport", "analyze", "DEFAULT_WINDOW"]

DEFAULT_WINDOW = 8


@dataclass
class KnotReport:
    name: str
    delta: object
    diagram_delta: object
    bl: object
    cbl: object
    weight: object
    alpha: object
    verdict: object
    expected: str = None
    witness: object = None
    seconds: float = 0.0
    notes: list = field(default_factory=list)

    @property
    def formulas_agree(self):
        return self.bl == self.cbl

    @property
    def delta_agrees(self):
        return self.delta.delta == self.diagram_delta.delta

    @property
    def matches(self):
        """True/False against the expected value, None when there is none."""
        if self.expected is None:
            return None
        return self.witness is not None

    def to_dict(self):
        return {
            "knot": self.name,
            "delta": str(self.delta.delta),
            "diagram_delta_agrees": self.delta_agrees,
            "blanchfield_gram": self.bl.to_dict(),
            "cbl_agrees": self.formulas_agree,
            "weight_gram": self.weight.to_dict(),
            "alpha": self.alpha.to_dict(),
            "verdict": self.verdict.label,
            "verdict_reason": self.verdict.reason,
            "delta_at_minus_one": self.verdict.delta_minus_one,
            "expected_alpha": self.expected,
            "matches_expected": self.matches,
            "witness": None if self.witness is None else self.witness.to_text(),
        }

    def to_text(self):
        lines = [f"knot {self.name}", f"  delta: {self.delta.delta}",
                 f"  diagram delta agrees: {self.delta_agrees}",
                 f"  cbl equals Bl: {self.formulas_agree}"]
        body = [self.bl.to_text("blanchfield"), self.weight.to_text("weight"), self.alpha.to_text()]
        for b in body:
            lines += ["  " + ln for ln in b.splitlines()]
        lines.append(f"  verdict: {self.verdict.label} ({self.verdict.reason})")
        if self.expected is not None:
            lines.append(f"  expected alpha: {self.expected}")
            lines.append(f"  matches expected: {self.matches}"
                         + ("" if self.witness is None else f" via {self.witness.to_text()}"))
        return "\n".join(lines)


def analyze(record, strict_sign=False, window=DEFAULT_WINDOW, diagram=None):
    """
    Full report for a database record.  ``diagram`` overrides the stored PD
    code (used for alternative diagrams); ``window`` is the depth of the
    norm-orbit search used for the comparison with the expected value.
    """
    t0 = time.perf_counter()
    s = record.seifert_data
    m = s.modulus
    kd = diagram if diagram is not None else record.diagram
    dd = Modulus(diagram_alexander(kd), knot=False)
    bl = blanchfield_gram(s)
    cb = cbl_gram(s)
    basis = coloring_generators(kd, m)
    qg = weight_gram(kd, basis)
    res = alpha_extract(qg, bl, strict_sign=strict_sign)
    verdict = alpha_classify(res)
    exp = record.expected_alpha
    wit = None
    if exp is not None and res.raw is not None:
        wit = match_expected(res.raw, record.expected_alpha_value(), strict_sign=strict_sign,
                             depth=window)
    return KnotReport(record.name, m, dd, bl, cb, qg, res, verdict, exp, wit,
                      time.perf_counter() - t0)
