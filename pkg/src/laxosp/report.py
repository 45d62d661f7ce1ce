"""Structured pass/fail records for identity checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .graded import GradedMatrix
from .qscalar import LaurentScalar


@dataclass
class VerificationReport:
    check: str
    n: int
    mode: str = "symbolic"
    status: str = "pass"  # pass | fail | not-applicable
    instances: int = 0
    skipped: list[str] = field(default_factory=list)
    first_failure: str | None = None
    residual: tuple[int, int, LaurentScalar] | None = None
    seconds: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status != "fail"

    def record(self, label: str, residual: GradedMatrix) -> bool:
        """Count one identity instance; ``residual`` must be exactly zero."""
        self.instances += 1
        if residual.is_zero():
            return True
        if self.status != "fail":
            self.status = "fail"
            self.first_failure = label
            self.residual = residual.first_nonzero()
        return False

    def record_bool(self, label: str, ok: bool) -> bool:
        self.instances += 1
        if not ok and self.status != "fail":
            self.status = "fail"
            self.first_failure = label
        return ok

    def skip(self, label: str) -> None:
        self.skipped.append(label)

    def summary(self) -> str:
        head = f"[{self.status.upper():>4}] {self.check:<16} n={self.n:<3} {self.mode:<22}"
        body = f"{self.instances} identities"
        if self.skipped:
            body += f", {len(self.skipped)} skipped"
        body += f", {self.seconds:.2f}s"
        if self.status == "fail":
            body += f"\n       first failure: {self.first_failure}"
            if self.residual is not None:
                r, c, v = self.residual
                body += f"; residual[{r}, {c}] = {v}"
        if self.status == "not-applicable":
            body += f" ({'; '.join(self.notes)})"
        return f"{head} {body}"

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.check,
            "n": self.n,
            "mode": self.mode,
            "status": self.status,
            "instances": self.instances,
            "skipped": list(self.skipped),
            "first_failure": self.first_failure,
            "residual": None if self.residual is None else
            [self.residual[0], self.residual[1], self.residual[2].to_triples()],
            "notes": list(self.notes),
        }
