"""Uniform pass/fail reporting for property checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List


@dataclass
class CheckReport:
    """Outcome of one named check over many instances.

    Failures carry JSON-ready dicts describing the counterexample; an empty
    list means every instance passed.
    """

    check: str
    instances: int = 0
    failures: List[Dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, counterexample: Dict) -> None:
        self.instances += 1
        if not ok:
            self.failures.append(counterexample)

    def to_json(self) -> Dict:
        out = {
            "check": self.check,
            "instances": self.instances,
            "status": "pass" if self.passed else "fail",
            "failures": self.failures,
        }
        return out

    def summary_line(self) -> str:
        status = "pass" if self.passed else f"FAIL ({len(self.failures)})"
        return f"{self.check}: {self.instances} instances, {status}"
