"""Report values returned by every validator."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .chains import Chain, cell_name


def _jsonable(value: Any):
    if isinstance(value, Chain):
        return repr(value)
    if isinstance(value, (list, tuple)) and not (value and all(isinstance(v, int) for v in value)):
        return [_jsonable(v) for v in value]
    if isinstance(value, tuple):
        return cell_name(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value


@dataclass
class Violation:
    kind: str
    cell: Any = None
    k: int | None = None
    lhs: Any = None
    rhs: Any = None
    detail: str = ""

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.cell is not None:
            out["cell"] = cell_name(self.cell) if not isinstance(self.cell, list) else [_jsonable(c) for c in self.cell]
        if self.k is not None:
            out["k"] = self.k
        if self.lhs is not None:
            out["lhs"] = _jsonable(self.lhs)
        if self.rhs is not None:
            out["rhs"] = _jsonable(self.rhs)
        if self.detail:
            out["detail"] = self.detail
        return out

    def __str__(self):
        bits = [self.kind]
        if self.cell is not None:
            bits.append(f"cell={cell_name(self.cell) if not isinstance(self.cell, list) else self.cell}")
        if self.k is not None:
            bits.append(f"k={self.k}")
        if self.lhs is not None or self.rhs is not None:
            bits.append(f"lhs={self.lhs!r} rhs={self.rhs!r}")
        if self.detail:
            bits.append(self.detail)
        return " ".join(bits)


@dataclass
class Report:
    check: str
    violations: list[Violation] = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.passed

    def add(self, kind, **kw) -> Violation:
        v = Violation(kind, **kw)
        self.violations.append(v)
        return v

    @property
    def first(self) -> Violation | None:
        return self.violations[0] if self.violations else None

    def extend(self, other: "Report"):
        self.violations.extend(other.violations)

    def to_json(self) -> dict:
        out = {"check": self.check, "pass": self.passed, "violations": [v.to_json() for v in self.violations]}
        if self.stats:
            out["stats"] = _jsonable(self.stats)
        return out

    def __str__(self):
        head = f"{self.check}: {'PASS' if self.passed else 'FAIL'}"
        if self.stats:
            head += " (" + ", ".join(f"{k}={v}" for k, v in self.stats.items()) + ")"
        return "\n".join([head] + [f"  {v}" for v in self.violations])
