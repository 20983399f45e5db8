"""Check reports: per-instance law violations and structural errors."""
from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    axiom: str
    instance: str
    lhs: str
    rhs: str


@dataclass
class Report:
    """Outcome of an axiom check.

    status is "error" if any structural problem was found (malformed tables,
    unmet preconditions), "fail" if any law instance is violated, else "pass".
    Violations are kept in a deterministic order (sorted by axiom, instance).
    """

    title: str = "check"
    violations: list[Violation] = field(default_factory=list)
    structural: list[str] = field(default_factory=list)
    sampled: bool = False
    seconds: float = 0.0

    @property
    def status(self) -> str:
        if self.structural:
            return "error"
        return "fail" if self.violations else "pass"

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def law(self, axiom: str, instance, lhs, rhs) -> None:
        self.violations.append(Violation(axiom, render(instance), render(lhs), render(rhs)))

    def error(self, message: str) -> None:
        self.structural.append(message)

    def require(self, condition: bool, axiom: str, instance, lhs, rhs) -> bool:
        if not condition:
            self.law(axiom, instance, lhs, rhs)
        return condition

    def merge(self, other: "Report") -> "Report":
        self.violations.extend(other.violations)
        self.structural.extend(other.structural)
        self.sampled = self.sampled or other.sampled
        self.seconds += other.seconds
        return self

    def finalize(self) -> "Report":
        self.violations = sorted(set(self.violations), key=lambda v: (v.axiom, v.instance))
        self.structural = sorted(set(self.structural))
        return self

    # timing is deliberately not emitted: reports must be byte-identical
    # across runs for identical inputs.
    def to_json_dict(self) -> dict:
        self.finalize()
        return {
            "title": self.title,
            "status": self.status,
            "sampled": self.sampled,
            "structural": list(self.structural),
            "violations": [
                {"axiom": v.axiom, "instance": v.instance, "lhs": v.lhs, "rhs": v.rhs}
                for v in self.violations
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)

    def format_text(self) -> str:
        self.finalize()
        lines = [f"{self.title}: {self.status.upper()}" + (" (sampled)" if self.sampled else "")]
        for msg in self.structural:
            lines.append(f"  error: {msg}")
        for v in self.violations:
            lines.append(f"  {v.axiom} @ {v.instance}: {v.lhs} != {v.rhs}")
        return "\n".join(lines)


def render(value) -> str:
    """Small deterministic rendering of labels, tuples and arrows."""
    if isinstance(value, str):
        return value
    if isinstance(value, tuple):
        return "(" + ",".join(render(v) for v in value) + ")"
    return repr(value)
