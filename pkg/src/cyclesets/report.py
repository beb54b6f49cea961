"""Pass/fail reports shared by the verification routines and the CLI."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


def jsonable(value: Any) -> Any:
    """Convert tuples, sets and numpy scalars into plain JSON values."""
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(jsonable(v) for v in value)
    if hasattr(value, "item") and not isinstance(value, (str, bytes)):
        return value.item()
    return value


@dataclass
class Report:
    checks: dict[str, bool] = field(default_factory=dict)
    witnesses: list[dict] = field(default_factory=list)
    metrics: dict[str, Any] = field(default_factory=dict)

    def check(self, name: str, ok: bool, witness: Any = None) -> bool:
        ok = bool(ok)
        self.checks[name] = ok
        if not ok:
            self.witnesses.append({"check": name, "witness": jsonable(witness)})
        return ok

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    @property
    def status(self) -> str:
        return "pass" if self.ok else "fail"

    def to_dict(self) -> dict:
        metrics = dict(jsonable(self.metrics))
        metrics["checks"] = dict(self.checks)
        return {"status": self.status, "witnesses": jsonable(self.witnesses), "metrics": metrics}

    def __bool__(self) -> bool:
        return self.ok
