"""Suite: runs checks against root systems and collects a report.

Unlike a pipeline, a suite never stops at the first failure. A failing check
records a failed result, and a crashing check records its CheckError. Either
way the run continues so the report covers everything requested.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

from minorbit.check import Check, CheckOutcome, CheckSequence
from minorbit.context import RunContext
from minorbit.errors import CheckError
from minorbit.tracer import NullTracer, Tracer

if TYPE_CHECKING:
    from collections.abc import Iterable

    from minorbit.rootsys import RootSystem


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one check on one root system."""

    check_name: str
    system: str
    passed: bool
    detail: str = ""
    skipped: bool = False
    duration_ms: float | None = None

    def as_dict(self) -> dict[str, Any]:
        return {
            "check": self.check_name,
            "system": self.system,
            "status": "skip" if self.skipped else ("pass" if self.passed else "fail"),
            "detail": self.detail,
        }


@dataclass
class SuiteReport:
    """All results of one suite run, in execution order."""

    suite_name: str
    run_id: str
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def executed(self) -> list[CheckResult]:
        return [r for r in self.results if not r.skipped]

    def get(self, check_name: str, system: str | None = None) -> CheckResult:
        """The first result for check_name (and system, when given)."""
        for r in self.results:
            if r.check_name == check_name and (system is None or r.system == system):
                return r
        raise KeyError(f"no result for {check_name!r} on {system!r}")

    def merge(self, other: SuiteReport) -> SuiteReport:
        return SuiteReport(self.suite_name, self.run_id, self.results + other.results)

    def summary(self) -> dict[str, Any]:
        executed = self.executed()
        return {
            "suite": self.suite_name,
            "run_id": self.run_id,
            "passed": self.passed,
            "executed": len(executed),
            "failed": len(self.failures),
            "skipped": len(self.results) - len(executed),
            "results": [r.as_dict() for r in self.results],
        }


def _as_list(checks: Check | CheckSequence | Iterable[Check]) -> list[Check]:
    if isinstance(checks, Check):
        return [checks]
    if isinstance(checks, CheckSequence):
        return list(checks.checks)
    items = list(checks)
    for c in items:
        if not isinstance(c, Check):
            raise TypeError(f"Expected Check or CheckSequence, got {type(c).__name__}")
    return items


class Suite:
    """Runs checks against one or more root systems.

    Usage:
        suite = Suite("verify").use(StderrTracer())
        report = suite.run(transpose_duality >> middle_identity, build("E", 6))
    """

    def __init__(self, name: str = "default") -> None:
        self.name = name
        self._tracer: Tracer = NullTracer()
        self._last_context: RunContext | None = None

    @property
    def last_context(self) -> RunContext | None:
        """Context of the most recent run, if any."""
        return self._last_context

    def use(self, tracer: Tracer) -> Suite:
        """Attach a tracer. Returns self for chaining."""
        self._tracer = tracer
        return self

    def run(
        self,
        checks: Check | CheckSequence | Iterable[Check],
        rs: RootSystem,
        *,
        metadata: dict[str, Any] | None = None,
    ) -> SuiteReport:
        """Run every check on a single root system."""
        return self.run_many(checks, [rs], metadata=metadata)

    def run_many(
        self,
        checks: Check | CheckSequence | Iterable[Check],
        systems: Iterable[RootSystem],
        *,
        metadata: dict[str, Any] | None = None,
    ) -> SuiteReport:
        """Run every check on every root system, system by system."""
        check_list = _as_list(checks)
        ctx = RunContext(suite_name=self.name, metadata=metadata or {})
        self._last_context = ctx
        report = SuiteReport(self.name, ctx.run_id)

        self._tracer.on_suite_start(ctx)
        try:
            for rs in systems:
                for c in check_list:
                    report.results.append(self._run_one(ctx, c, rs))
        finally:
            self._tracer.on_suite_end(ctx)
        return report

    def _run_one(self, ctx: RunContext, c: Check, rs: RootSystem) -> CheckResult:
        if not c.applies_to(rs):
            return CheckResult(c.name, rs.name, passed=True, detail="not applicable", skipped=True)

        timing = ctx.start_check(c.name, rs)
        self._tracer.on_check_start(ctx, c.name, rs.name)
        try:
            outcome: CheckOutcome = c.execute(rs)
        except CheckError as e:
            timing.finish(passed=False, error=e)
            self._tracer.on_check_error(ctx, c.name, rs.name, e.original)
            return CheckResult(
                c.name, rs.name, passed=False, detail=f"crashed: {e.original!r}",
                duration_ms=timing.duration_ms,
            )
        timing.finish(passed=outcome.passed)
        self._tracer.on_check_end(ctx, c.name, rs.name, outcome)
        return CheckResult(
            c.name, rs.name, outcome.passed, outcome.detail, duration_ms=timing.duration_ms
        )
