"""Structured results for validators.

Validators never raise on bad input; they collect findings so that a caller
can report every problem at once.  A finding is a violation; a note records
a benign boundary situation that an auditor may still want to see.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Finding:
    """One violation discovered by a validator."""

    code: str
    message: str
    subject: tuple[Any, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        return {"code": self.code, "message": self.message, "subject": list(self.subject)}


@dataclass
class ValidationReport:
    """Outcome of one validation pass.

    ``findings`` are failures; ``notes`` are non-failing observations
    (e.g. a coordinate tie that sits exactly on a wedge boundary).
    """

    check: str
    findings: list[Finding] = field(default_factory=list)
    notes: list[Finding] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.findings

    def fail(self, code: str, message: str, subject: tuple[Any, ...] = ()) -> None:
        self.findings.append(Finding(code, message, subject))

    def note(self, code: str, message: str, subject: tuple[Any, ...] = ()) -> None:
        self.notes.append(Finding(code, message, subject))

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.check,
            "ok": self.ok,
            "findings": [f.to_dict() for f in sorted(self.findings, key=lambda f: (f.code, f.subject))],
            "notes": [f.to_dict() for f in sorted(self.notes, key=lambda f: (f.code, f.subject))],
        }

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.findings)} violation(s)"
        extra = f", {len(self.notes)} note(s)" if self.notes else ""
        return f"{self.check}: {status}{extra}"
