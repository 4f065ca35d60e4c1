"""Machine-readable verification outcomes."""

from __future__ import annotations

import enum
import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterator


class Status(str, enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    INDETERMINATE = "INDETERMINATE"


def jsonable(value: Any) -> Any:
    """Exact values serialize as strings ("p/q"); containers recurse."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, bool) or value is None or isinstance(value, (str, float)):
        return value
    if isinstance(value, int):
        return value if abs(value) < 2**53 else str(value)
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if hasattr(value, "lo") and hasattr(value, "hi"):
        return {"lo": str(value.lo), "hi": str(value.hi)}
    return str(value)


@dataclass
class VerificationReport:
    check: str
    range: tuple[int, int] | None
    status: Status
    counterexample: dict[str, Any] | None = None
    seconds: float = 0.0
    details: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.status = Status(self.status)
        if self.range is not None:
            self.range = (int(self.range[0]), int(self.range[1]))
        if self.status is Status.FAIL and not self.counterexample:
            raise ValueError(f"FAIL report for {self.check!r} needs a counterexample")

    @property
    def ok(self) -> bool:
        return self.status is Status.PASS

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "check": self.check,
            "range": list(self.range) if self.range is not None else None,
            "status": self.status.value,
        }
        if self.counterexample is not None:
            out["counterexample"] = jsonable(self.counterexample)
        out["seconds"] = round(self.seconds, 6)
        if self.details:
            out["details"] = jsonable(self.details)
        return out

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> VerificationReport:
        rng = data.get("range")
        return cls(
            check=data["check"],
            range=tuple(rng) if rng is not None else None,
            status=Status(data["status"]),
            counterexample=data.get("counterexample"),
            seconds=float(data.get("seconds", 0.0)),
            details=data.get("details", {}),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def line(self) -> str:
        rng = f" n={self.range[0]}..{self.range[1]}" if self.range else ""
        text = f"{self.status.value:<13} {self.check}{rng}"
        if self.counterexample:
            pairs = ", ".join(f"{k}={v}" for k, v in jsonable(self.counterexample).items())
            text += f"  [{pairs}]"
        return text


class _Timer:
    seconds = 0.0


@contextmanager
def stopwatch() -> Iterator[_Timer]:
    timer = _Timer()
    start = time.perf_counter()
    try:
        yield timer
    finally:
        timer.seconds = time.perf_counter() - start


def first_failure(check: str, rng: tuple[int, int], items, predicate) -> VerificationReport:
    """PASS if ``predicate(item)`` returns None for every item, else FAIL at the first
    item for which it returns a counterexample dict."""
    start = time.perf_counter()
    for item in items:
        bad = predicate(item)
        if bad is not None:
            return VerificationReport(check, rng, Status.FAIL, bad, time.perf_counter() - start)
    return VerificationReport(check, rng, Status.PASS, None, time.perf_counter() - start)
