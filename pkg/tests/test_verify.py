from __future__ import annotations

import pytest

from minorbit import QUICK, EngineConfig, RootSystem, Suite, build
from minorbit.verify import (
    edge_multiplicities,
    golden_cohomology,
    golden_matrices,
    hard_lefschetz,
    length_formulas,
    level_connectivity,
    line_bundle_identity,
    middle_identity,
    smith_minor_oracle,
    standard_checks,
    sweep,
    typea_crosscheck,
    weyl_oracle,
)

SMALL = [("A", 1), ("A", 3), ("B", 2), ("B", 4), ("C", 3), ("D", 4), ("D", 5), ("G", 2), ("F", 4)]


@pytest.mark.parametrize(("family", "rank"), SMALL)
def test_standard_checks_pass(family: str, rank: int) -> None:
    report = Suite("verify").run(standard_checks(QUICK), build(family, rank))
    assert report.passed, [(r.check_name, r.detail) for r in report.failures]


def test_exceptional_golden(e6: RootSystem) -> None:
    assert golden_cohomology.execute(e6).passed
    assert golden_matrices.execute(e6).passed
    assert middle_identity.execute(e6).passed
    assert edge_multiplicities.execute(e6).passed


@pytest.mark.slow
@pytest.mark.parametrize("rank", [7, 8])
def test_large_e_types(rank: int) -> None:
    rs = build("E", rank)
    for c in (golden_cohomology, golden_matrices, middle_identity, hard_lefschetz):
        outcome = c.execute(rs)
        assert outcome.passed, outcome.detail


def test_applicability(a3: RootSystem, g2: RootSystem, b3: RootSystem) -> None:
    assert typea_crosscheck.applies_to(a3)
    assert not typea_crosscheck.applies_to(g2)
    assert golden_matrices.applies_to(g2)
    assert not golden_matrices.applies_to(b3)


def test_oracles_respect_rank_limit(e6: RootSystem, g2: RootSystem) -> None:
    checks = {c.name: c for c in standard_checks(EngineConfig(oracle_max_rank=4))}
    assert not checks["weyl_oracle"].applies_to(e6)
    assert not checks["length_formulas"].applies_to(e6)
    assert not checks["line_bundle_identity"].applies_to(e6)
    assert checks["weyl_oracle"].applies_to(g2)
    assert checks["golden_cohomology"].applies_to(e6)


def test_weyl_oracle_cap_is_reported(g2: RootSystem) -> None:
    checks = {c.name: c for c in standard_checks(EngineConfig(coset_cap=2))}
    report = Suite("cap").run(checks["weyl_oracle"], g2)
    assert not report.passed
    assert "CapExceededError" in report.results[0].detail


def test_individual_oracles(b3: RootSystem) -> None:
    assert weyl_oracle.execute(b3).passed
    assert length_formulas.execute(b3).passed
    assert smith_minor_oracle.execute(b3).passed


def test_sweep_covers_configured_ranks() -> None:
    names = [rs.name for rs in sweep(QUICK)]
    assert names[:6] == ["A1", "A2", "A3", "A4", "A5", "A6"]
    assert "B5" in names and "B6" not in names
    assert "D3" in names and "C2" in names
    assert names[-5:] == ["E6", "E7", "E8", "F4", "G2"]
    assert len(standard_checks()) == 17


@pytest.mark.slow
def test_full_sweep() -> None:
    report = Suite("all").run_many(standard_checks(), sweep())
    assert report.passed, [(r.system, r.check_name, r.detail) for r in report.failures]


@pytest.mark.parametrize(("family", "rank"), [("A", 4), ("B", 3), ("C", 4), ("G", 2), ("E", 6)])
def test_line_bundle_and_connectivity(family: str, rank: int) -> None:
    rs = build(family, rank)
    assert line_bundle_identity.execute(rs).passed
    assert level_connectivity.execute(rs).passed


def test_line_bundle_identity_honours_the_cap(f4: RootSystem) -> None:
    checks = {c.name: c for c in standard_checks(EngineConfig(coset_cap=5))}
    report = Suite("cap").run(checks["line_bundle_identity"], f4)
    assert not report.passed
    assert "CapExceededError" in report.results[0].detail
