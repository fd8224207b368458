"""Tracer protocol and the built-in StderrTracer.

Tracers are opt-in. A suite with no tracer attached runs silently; results
always go to stdout through the CLI renderers, progress goes to stderr.
"""

from __future__ import annotations

import sys
from typing import TYPE_CHECKING, Protocol, TextIO, runtime_checkable

if TYPE_CHECKING:
    from minorbit.check import CheckOutcome
    from minorbit.context import RunContext


@runtime_checkable
class Tracer(Protocol):
    """Protocol for suite tracers. Any object with these methods works."""

    def on_suite_start(self, ctx: RunContext) -> None: ...
    def on_suite_end(self, ctx: RunContext) -> None: ...
    def on_check_start(self, ctx: RunContext, check_name: str, system: str) -> None: ...
    def on_check_end(
        self, ctx: RunContext, check_name: str, system: str, outcome: CheckOutcome
    ) -> None: ...
    def on_check_error(
        self, ctx: RunContext, check_name: str, system: str, error: Exception
    ) -> None: ...


class NullTracer:
    """Default tracer that does nothing."""

    def on_suite_start(self, ctx: RunContext) -> None:
        pass

    def on_suite_end(self, ctx: RunContext) -> None:
        pass

    def on_check_start(self, ctx: RunContext, check_name: str, system: str) -> None:
        pass

    def on_check_end(
        self, ctx: RunContext, check_name: str, system: str, outcome: CheckOutcome
    ) -> None:
        pass

    def on_check_error(
        self, ctx: RunContext, check_name: str, system: str, error: Exception
    ) -> None:
        pass


class StderrTracer:
    """Prints one line per check to stderr.

    Usage:
        Suite("verify").use(StderrTracer(verbose=True))

    With verbose=False only failures and the final line are printed.
    """

    def __init__(self, verbose: bool = False, stream: TextIO | None = None) -> None:
        self.verbose = verbose
        self.stream = stream

    def _print(self, line: str) -> None:
        print(line, file=self.stream or sys.stderr)

    def on_suite_start(self, ctx: RunContext) -> None:
        self._print(f"▶ Suite '{ctx.suite_name}' started [run={ctx.run_id}]")

    def on_suite_end(self, ctx: RunContext) -> None:
        failed = len(ctx.failed_checks)
        status = "✓" if not failed else "✗"
        self._print(
            f"{status} Suite '{ctx.suite_name}' finished "
            f"[{ctx.total_duration_ms:.1f}ms, {len(ctx.by_system())} systems, "
            f"{len(ctx.timings)} checks, {failed} failed]"
        )

    def on_check_start(self, ctx: RunContext, check_name: str, system: str) -> None:
        if self.verbose:
            self._print(f"  → {check_name} [{system}]")

    def on_check_end(
        self, ctx: RunContext, check_name: str, system: str, outcome: CheckOutcome
    ) -> None:
        timing = ctx.timings[-1] if ctx.timings else None
        ms = f" [{timing.duration_ms:.1f}ms]" if timing and timing.duration_ms else ""
        if outcome.passed and self.verbose:
            self._print(f"  ✓ {check_name} [{system}]{ms}")
        elif not outcome.passed:
            self._print(f"  ✗ {check_name} [{system}]{ms}: {outcome.detail}")

    def on_check_error(
        self, ctx: RunContext, check_name: str, system: str, error: Exception
    ) -> None:
        self._print(f"  ✗ {check_name} [{system}] CRASHED: {error}")
