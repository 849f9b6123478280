"""Verification records shared by the check operations and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    id: str
    anchor: str
    ok: bool
    payload: dict[str, Any] = field(default_factory=dict)

    def as_json(self) -> dict[str, Any]:
        return {"id": self.id, "anchor": self.anchor,
                "status": "pass" if self.ok else "fail", "payload": self.payload}


@dataclass
class Report:
    """An ordered list of checks; failing checks carry a counterexample payload."""
    name: str
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, id: str, anchor: str, ok: bool, **payload) -> Check:
        c = Check(id, anchor, bool(ok), payload)
        self.checks.append(c)
        return c

    def extend(self, other: Report, prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.id, c.anchor, c.ok, c.payload))

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def __getitem__(self, id: str) -> Check:
        for c in self.checks:
            if c.id == id:
                return c
        raise KeyError(id)
