from __future__ import annotations

import time

from minorbit import RootSystem, RunContext, SystemTally


def test_context_creation() -> None:
    ctx1 = RunContext(suite_name="a")
    ctx2 = RunContext(suite_name="b")

    assert ctx1.run_id != ctx2.run_id
    assert ctx1.metadata == {}


def test_check_timing_records_the_system(e6: RootSystem) -> None:
    ctx = RunContext(suite_name="suite")
    timing = ctx.start_check("middle_identity", e6)
    assert timing.passed is None
    time.sleep(0.01)
    timing.finish()

    assert (timing.system, timing.rank, timing.h_dual) == ("E6", 6, 12)
    assert timing.passed is True
    assert timing.duration_ms is not None
    assert timing.duration_ms > 0
    assert ctx.total_duration_ms == timing.duration_ms


def test_failed_and_crashed_checks(a1: RootSystem) -> None:
    ctx = RunContext(suite_name="suite")
    ctx.start_check("ok", a1).finish()
    ctx.start_check("wrong", a1).finish(passed=False)
    ctx.start_check("bad", a1).finish(error=ValueError("boom"))

    assert [t.check_name for t in ctx.crashed_checks] == ["bad"]
    assert [t.check_name for t in ctx.failed_checks] == ["wrong", "bad"]
    assert ctx.summary()["checks"][2]["error"] == "boom"
    assert ctx.summary()["checks"][2]["passed"] is False


def test_tallies_per_system(g2: RootSystem, f4: RootSystem) -> None:
    ctx = RunContext(suite_name="sweep")
    ctx.start_check("a", g2).finish()
    ctx.start_check("b", g2).finish(passed=False)
    ctx.start_check("a", f4).finish()

    tallies = ctx.by_system()
    assert list(tallies) == ["G2", "F4"]
    assert tallies["G2"] == SystemTally("G2", 2, 4, 2, 1, tallies["G2"].duration_ms)
    assert (tallies["F4"].executed, tallies["F4"].failed, tallies["F4"].h_dual) == (1, 0, 9)


def test_context_summary(g2: RootSystem, f4: RootSystem) -> None:
    ctx = RunContext(suite_name="suite")
    ctx.start_check("a", g2).finish()
    ctx.start_check("b", f4).finish()

    summary = ctx.summary()
    assert summary["suite"] == "suite"
    assert len(summary["checks"]) == 2
    assert summary["checks"][1] == {
        "name": "b",
        "system": "F4",
        "passed": True,
        "duration_ms": summary["checks"][1]["duration_ms"],
        "error": None,
    }
    assert [s["system"] for s in summary["systems"]] == ["G2", "F4"]
    assert summary["systems"][1]["rank"] == 4
