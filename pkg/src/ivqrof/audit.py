"""Run-level audit trail: degenerate inputs, fallbacks, and irregular
intermediates are recorded here instead of stopping a run."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class AuditEvent:
    kind: str
    where: str
    detail: str

    def __str__(self) -> str:
        return f"[{self.kind}] {self.where}: {self.detail}"


@dataclass
class AuditTrail:
    events: list[AuditEvent] = field(default_factory=list)

    def flag(self, kind: str, where: str, detail: str) -> None:
        self.events.append(AuditEvent(kind, where, detail))

    def count(self, kind: str) -> int:
        return sum(1 for e in self.events if e.kind == kind)

    def __iter__(self):
        return iter(self.events)

    def __len__(self) -> int:
        return len(self.events)
