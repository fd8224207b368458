"""Run context shared by the checks of one verification suite run.

Every executed check leaves a CheckTiming naming the root system it ran on,
with its rank and dual Coxeter number, so a sweep can be summarised per type.
"""

from __future__ import annotations

import time
import uuid
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from minorbit.rootsys import RootSystem


@dataclass
class CheckTiming:
    """One check on one root system: when it ran and how it ended.

    Attributes:
        passed: None while running; False for a failed or crashed check.
    """

    check_name: str
    system: str
    rank: int
    h_dual: int
    started_at: float
    ended_at: float | None = None
    duration_ms: float | None = None
    passed: bool | None = None
    error: Exception | None = None

    def finish(self, passed: bool = True, error: Exception | None = None) -> None:
        self.ended_at = time.monotonic()
        self.duration_ms = (self.ended_at - self.started_at) * 1000
        self.passed = passed and error is None
        self.error = error


@dataclass(frozen=True)
class SystemTally:
    """Executed and failed check counts for one root system."""

    system: str
    rank: int
    h_dual: int
    executed: int
    failed: int
    duration_ms: float

    def as_dict(self) -> dict[str, Any]:
        return {
            "system": self.system,
            "rank": self.rank,
            "h_dual": self.h_dual,
            "executed": self.executed,
            "failed": self.failed,
            "duration_ms": round(self.duration_ms, 2),
        }


@dataclass
class RunContext:
    """Execution context for a suite run.

    Attributes:
        run_id: Unique identifier for this run.
        suite_name: Name of the suite being executed.
        metadata: Free-form metadata (the CLI records the config here).
        timings: Ordered timing records, one per executed check.
    """

    run_id: str = field(default_factory=lambda: uuid.uuid4().hex[:12])
    suite_name: str = ""
    metadata: dict[str, Any] = field(default_factory=dict)
    timings: list[CheckTiming] = field(default_factory=list)

    def start_check(self, check_name: str, rs: RootSystem) -> CheckTiming:
        timing = CheckTiming(check_name, rs.name, rs.rank, rs.h_dual, time.monotonic())
        self.timings.append(timing)
        return timing

    @property
    def total_duration_ms(self) -> float:
        return sum(t.duration_ms for t in self.timings if t.duration_ms is not None)

    @property
    def crashed_checks(self) -> list[CheckTiming]:
        """Checks that raised instead of returning an outcome."""
        return [t for t in self.timings if t.error is not None]

    @property
    def failed_checks(self) -> list[CheckTiming]:
        """Finished checks that did not pass, crashes included."""
        return [t for t in self.timings if t.passed is False]

    def by_system(self) -> dict[str, SystemTally]:
        """Tallies per root system, in the order the systems were first visited."""
        grouped: dict[str, list[CheckTiming]] = {}
        for t in self.timings:
            grouped.setdefault(t.system, []).append(t)
        return {
            name: SystemTally(
                system=name,
                rank=ts[0].rank,
                h_dual=ts[0].h_dual,
                executed=len(ts),
                failed=sum(1 for t in ts if t.passed is False),
                duration_ms=sum(t.duration_ms or 0.0 for t in ts),
            )
            for name, ts in grouped.items()
        }

    def summary(self) -> dict[str, Any]:
        """Return a JSON-ready summary of the run."""
        return {
            "run_id": self.run_id,
            "suite": self.suite_name,
            "total_duration_ms": round(self.total_duration_ms, 2),
            "systems": [tally.as_dict() for tally in self.by_system().values()],
            "checks": [
                {
                    "name": t.check_name,
                    "system": t.system,
                    "passed": t.passed,
                    "duration_ms": round(t.duration_ms, 2) if t.duration_ms else None,
                    "error": str(t.error) if t.error else None,
                }
                for t in self.timings
            ],
        }
