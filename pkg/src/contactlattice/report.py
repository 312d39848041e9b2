"""Check outcomes shared by every verifier and the command line."""
from __future__ import annotations

from dataclasses import dataclass, field

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass
class Check:
    name: str
    status: str
    detail: str = ""
    residual: float | None = None

    @classmethod
    def of(cls, name: str, ok: bool, detail: str = "", residual: float | None = None) -> Check:
        return cls(name, PASS if ok else FAIL, detail, residual)

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def as_dict(self) -> dict:
        res = None if self.residual is None else float(f"{self.residual:.3e}")
        return {"name": self.name, "status": self.status, "detail": self.detail, "residual": res}


@dataclass
class Report:
    """Ordered list of checks about one or more catalog entries."""

    entry: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = "", residual: float | None = None) -> bool:
        self.checks.append(Check.of(f"{self.entry}:{name}" if self.entry else name, ok, detail,
                                    residual))
        return ok

    def skip(self, name: str, detail: str = ""):
        self.checks.append(Check(f"{self.entry}:{name}" if self.entry else name, SKIP, detail))

    def extend(self, other: Report):
        self.checks.extend(other.checks)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == FAIL]

    def __bool__(self):
        return self.ok
