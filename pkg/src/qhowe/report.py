"""Check results and reports: deterministic JSON plus a text rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional


@dataclass
class CheckResult:
    id: str
    params: dict
    status: str  # "pass" | "fail"
    witness: Optional[str] = None
    ms: Optional[float] = None

    @property
    def ok(self) -> bool:
        return self.status == "pass"


def passed(id: str, params: dict, detail: Optional[str] = None) -> CheckResult:
    return CheckResult(id, dict(params), "pass", detail)


def failed(id: str, params: dict, witness: str) -> CheckResult:
    return CheckResult(id, dict(params), "fail", witness)


def check(id: str, params: dict, ok: bool, witness: str = "") -> CheckResult:
    if ok:
        return passed(id, params)
    return failed(id, params, witness or "assertion failed")


@dataclass
class Report:
    version: str
    conventions: dict
    checks: list = field(default_factory=list)

    def extend(self, results):
        self.checks.extend(results)

    @property
    def n_pass(self) -> int:
        return sum(1 for c in self.checks if c.ok)

    @property
    def n_fail(self) -> int:
        return sum(1 for c in self.checks if not c.ok)

    def all_pass(self) -> bool:
        return self.n_fail == 0

    def sorted_checks(self) -> list:
        return sorted(
            self.checks,
            key=lambda c: (c.id, json.dumps(c.params, sort_keys=True, default=str)),
        )

    def to_dict(self, timings: bool = False) -> dict:
        checks = []
        for c in self.sorted_checks():
            rec = {"id": c.id, "params": c.params, "status": c.status}
            if c.witness is not None:
                rec["witness"] = c.witness
            if timings and c.ms is not None:
                rec["ms"] = c.ms
            checks.append(rec)
        return {
            "version": self.version,
            "conventions": self.conventions,
            "checks": checks,
            "summary": {"pass": self.n_pass, "fail": self.n_fail},
        }

    def json_bytes(self, timings: bool = False) -> bytes:
        text = json.dumps(self.to_dict(timings=timings), sort_keys=True, indent=2, default=str)
        return (text + "\n").encode()

    def text(self) -> str:
        lines = [f"qhowe {self.version}"]
        for k, v in sorted(self.conventions.items()):
            lines.append(f"  convention {k} = {v}")
        for c in self.sorted_checks():
            params = " ".join(f"{k}={v}" for k, v in sorted(c.params.items()))
            line = f"[{c.status.upper():4}] {c.id} {params}"
            if c.ms is not None:
                line += f" ({c.ms:.1f} ms)"
            lines.append(line)
            if not c.ok and c.witness:
                lines.append(f"        witness: {c.witness}")
        lines.append(f"summary: {self.n_pass} passed, {self.n_fail} failed")
        return "\n".join(lines) + "\n"
