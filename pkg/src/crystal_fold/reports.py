"""Verifier report records."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Report:
    check: str
    instance: dict[str, Any]
    status: str = "pass"
    witness: Any = None
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def fail(self, witness: Any) -> Report:
        if self.status == "pass":
            self.status = "fail"
            self.witness = witness
        return self

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"check": self.check, "instance": self.instance,
                               "status": self.status}
        if self.witness is not None:
            out["witness"] = _plain(self.witness)
        if self.details:
            out["details"] = _plain(self.details)
        return out


def _plain(value: Any) -> Any:
    from fractions import Fraction

    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else int(value)
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def all_passed(reports) -> bool:
    return all(r.passed for r in reports)
