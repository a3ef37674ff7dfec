"""Integer-exact verification reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable


def _token(x: object) -> str:
    return "".join(str(x).split()) or "-"


@dataclass(frozen=True)
class Check:
    name: str
    expected: object
    actual: object
    passed: bool

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"CHECK {_token(self.name)} {_token(self.expected)} {_token(self.actual)} {status}"


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def equal(self, name: str, expected: object, actual: object) -> bool:
        ok = expected == actual
        self.checks.append(Check(name, expected, actual, ok))
        return ok

    def bound(self, name: str, op: str, bound: int, actual: int) -> bool:
        """Record ``actual <op> bound`` for op in {'<=', '>='}."""
        cmp: dict[str, Callable[[int, int], bool]] = {
            "<=": lambda a, b: a <= b,
            ">=": lambda a, b: a >= b,
        }
        ok = cmp[op](actual, bound)
        self.checks.append(Check(name, f"{op}{bound}", actual, ok))
        return ok

    def truth(self, name: str, actual: bool) -> bool:
        return self.equal(name, True, bool(actual))

    def extend(self, other: Report, prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.expected, c.actual, c.passed))
        self.notes.extend(other.notes)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def lines(self) -> list[str]:
        return [c.line() for c in sorted(self.checks, key=lambda c: c.name)]

    def summary(self) -> str:
        passed = sum(c.passed for c in self.checks)
        verdict = "PASS" if self.ok else "FAIL"
        return f"{self.title}: {passed}/{len(self.checks)} checks passed [{verdict}]"
