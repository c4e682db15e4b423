"""AxiomReport and quantifier scopes."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Any

from .edges import EdgeSet

DEFAULT_MAX_WITNESSES = 100


@dataclass(frozen=True)
class Scope:
    """How a universally quantified check is discharged."""

    kind: str = "exhaustive"
    count: int = 0
    seed: int = 0

    @classmethod
    def exhaustive(cls) -> "Scope":
        return cls("exhaustive")

    @classmethod
    def sampled(cls, count: int, seed: int = 0) -> "Scope":
        if count < 1:
            raise ValueError("sample count must be positive")
        return cls("sampled", count, seed)

    @classmethod
    def parse(cls, text: str, seed: int | None = None) -> "Scope":
        if text == "exhaustive":
            return cls.exhaustive()
        m = re.fullmatch(r"sampled:(\d+)", text)
        if not m:
            raise ValueError(f"bad scope {text!r}; use 'exhaustive' or 'sampled:COUNT'")
        if seed is None:
            raise ValueError("a seed is required for sampled scope")
        return cls.sampled(int(m.group(1)), seed)

    @property
    def is_exhaustive(self) -> bool:
        return self.kind == "exhaustive"

    def __str__(self) -> str:
        if self.is_exhaustive:
            return "exhaustive"
        return f"sampled(seed={self.seed}, count={self.count})"


def _encode(value: Any) -> Any:
    if isinstance(value, EdgeSet):
        return value.to_json()
    if isinstance(value, (frozenset, set)):
        return sorted(value)
    if isinstance(value, tuple):
        return [_encode(v) for v in value]
    if isinstance(value, list):
        return [_encode(v) for v in value]
    if isinstance(value, dict):
        return {k: _encode(v) for k, v in value.items()}
    return value


def _decode(value: Any) -> Any:
    if isinstance(value, dict):
        if set(value) == {"n", "edges"}:
            return EdgeSet.from_json(value)
        return {k: _decode(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_decode(v) for v in value]
    return value


class Witnesses:
    """Collects violation witnesses up to a cap while counting all of them."""

    def __init__(self, limit: int | None = DEFAULT_MAX_WITNESSES):
        self.limit = limit
        self.items: list[dict] = []
        self.count = 0

    def add(self, kind: str, **fields) -> None:
        self.count += 1
        if self.limit is None or len(self.items) < self.limit:
            self.items.append({"kind": kind, **fields})

    def __bool__(self) -> bool:
        return self.count > 0


@dataclass
class AxiomReport:
    suite: str
    passed: bool
    violations: list[dict] = field(default_factory=list)
    scope: str = "exhaustive"
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.passed == bool(self.violations):
            raise ValueError("an AxiomReport passes exactly when it has no violations")

    @classmethod
    def from_witnesses(cls, suite: str, w: Witnesses, scope: Scope | str = "exhaustive",
                       **details) -> "AxiomReport":
        if w.count > len(w.items):
            details["violation_count"] = w.count
            details["truncated"] = True
        return cls(suite, not w, list(w.items), str(scope), details)

    def to_json(self) -> dict:
        out = {"suite": self.suite, "passed": self.passed, "scope": self.scope,
               "violations": _encode(self.violations)}
        for k, v in self.details.items():
            out[k] = _encode(v)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "AxiomReport":
        known = {"suite", "passed", "scope", "violations"}
        details = {k: _decode(v) for k, v in data.items() if k not in known}
        return cls(data["suite"], bool(data["passed"]), _decode(data["violations"]),
                   data["scope"], details)
