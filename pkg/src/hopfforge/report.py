"""Check results and line-oriented reports shared by validation and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def machine_line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"CHECK {self.name} {verdict}" + (f" {self.detail}" if self.detail else "")


@dataclass
class ValidationReport:
    checks: list[CheckResult] = field(default_factory=list)
    verified_up_to: int | None = None  # set when the rewrite system is not fully confluent

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(CheckResult(name, passed, detail))

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def machine_lines(self) -> list[str]:
        lines = [c.machine_line() for c in self.checks]
        if self.verified_up_to is not None:
            lines.append(f"NOTE verified up-to-degree {self.verified_up_to}")
        return lines
