from __future__ import annotations

import json
from dataclasses import dataclass, field

MAX_RECORDED_FAILURES = 50


@dataclass
class Report:
    suite: str
    format: str
    spec: str
    cases: int = 0
    failures: list = field(default_factory=list)
    failure_count: int = 0
    witnesses: list = field(default_factory=list)
    ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def fail(self, inputs: dict, trace, violated: str):
        self.failure_count += 1
        if len(self.failures) < MAX_RECORDED_FAILURES:
            self.failures.append({"inputs": inputs, "trace": trace, "violated": violated})

    def check(self, ok: bool, inputs: dict, violated: str, trace=None) -> bool:
        self.cases += 1
        if not ok:
            self.fail(inputs, trace, violated)
        return ok

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "format": self.format,
            "spec": self.spec,
            "cases": self.cases,
            "failures": self.failures,
            "failure_count": self.failure_count,
            "witnesses": self.witnesses,
            "ms": round(self.ms, 1),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f", {len(self.witnesses)} witnesses" if self.witnesses else ""
        return (
            f"{status} {self.suite:28s} {self.format:12s} cases={self.cases} "
            f"failures={self.failure_count}{extra} ({self.ms / 1000:.2f}s)"
        )
