"""Line-oriented audit reports with exact-fraction formatting."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

Number = Union[int, Fraction]


def fmt(x: Number) -> str:
    """Integers as-is, other rationals as ``p/q``."""
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return str(x)


@dataclass(frozen=True)
class Finding:
    """One measured quantity against its bound.

    ``passed`` is ``None`` for informational lines that take no part in
    the verdict.
    """

    id: str
    quantity: Number
    bound: Number
    passed: Optional[bool]
    cmp: str = "<="

    def to_line(self) -> str:
        status = {True: "pass", False: "FAIL", None: "info"}[self.passed]
        return f"{self.id}: {fmt(self.quantity)} {self.cmp} {fmt(self.bound)} {status}"


@dataclass
class Report:
    name: str
    findings: list[Finding] = field(default_factory=list)
    applicable: bool = True
    reasons: list[str] = field(default_factory=list)
    artifacts: list[str] = field(default_factory=list)

    def add(self, finding: Finding) -> None:
        self.findings.append(finding)

    def inapplicable(self, reasons: list[str]) -> "Report":
        self.applicable = False
        self.reasons = list(reasons)
        return self

    @property
    def passed(self) -> bool:
        """True when applicable and no finding failed."""
        return self.applicable and all(f.passed is not False for f in self.findings)

    @property
    def failures(self) -> list[Finding]:
        return [f for f in self.findings if f.passed is False]

    @property
    def verdict(self) -> str:
        if not self.applicable:
            return "inapplicable"
        return "pass" if self.passed else "FAIL"

    def to_text(self) -> str:
        lines = [f"# {self.name}: {self.verdict}"]
        if not self.applicable:
            lines.append("inapplicable: " + ", ".join(self.reasons))
        lines.extend(f.to_line() for f in self.findings)
        for art in self.artifacts:
            lines.append(art.rstrip("\n"))
        return "\n".join(lines) + "\n"
