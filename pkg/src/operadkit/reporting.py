"""Pass/fail reports shared by the axiom and algebra checkers.

A report never raises on a failed law; it records which identity failed and a
witness tuple, so callers (tests, CLI) can decide how to surface it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    witness: dict | None = None

    def to_dict(self):
        return {
            "name": self.name,
            "status": "pass" if self.passed else "fail",
            "cases": self.cases,
            "witness": self.witness,
        }


@dataclass
class CheckReport:
    title: str
    checks: list[CheckResult] = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def add(self, result: CheckResult):
        self.checks.append(result)

    def extend_prefixed(self, prefix: str, other: "CheckReport"):
        for c in other.checks:
            self.checks.append(CheckResult(prefix + c.name, c.passed, c.cases, c.witness))

    def to_dict(self):
        return {
            "title": self.title,
            "passed": self.passed,
            "metadata": self.metadata,
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return canonical_json(self.to_dict())

    def summary_lines(self):
        for c in self.checks:
            yield f"{'PASS' if c.passed else 'FAIL'}  {c.name}  ({c.cases} cases)"


def canonical_json(obj) -> str:
    """Stable serialization used for golden files: sorted keys, 2-space indent."""
    return json.dumps(obj, sort_keys=True, indent=2, separators=(",", ": ")) + "\n"
