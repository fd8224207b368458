"""Shared checks and root systems for minorbit tests."""

from __future__ import annotations

import pytest

from minorbit import CheckOutcome, RootSystem, build, check


@check
def always_pass(rs: RootSystem) -> CheckOutcome:
    return CheckOutcome.ok()


@check
def always_fail(rs: RootSystem) -> CheckOutcome:
    return CheckOutcome.fail(f"{rs.name} rejected")


@check
def crashes(rs: RootSystem) -> CheckOutcome:
    raise ValueError("intentional failure")


@check
def is_simply_laced(rs: RootSystem) -> bool:
    return rs.r == 1


@pytest.fixture(scope="session")
def a1() -> RootSystem:
    return build("A", 1)


@pytest.fixture(scope="session")
def a2() -> RootSystem:
    return build("A", 2)


@pytest.fixture(scope="session")
def a3() -> RootSystem:
    return build("A", 3)


@pytest.fixture(scope="session")
def b3() -> RootSystem:
    return build("B", 3)


@pytest.fixture(scope="session")
def g2() -> RootSystem:
    return build("G", 2)


@pytest.fixture(scope="session")
def f4() -> RootSystem:
    return build("F", 4)


@pytest.fixture(scope="session")
def e6() -> RootSystem:
    return build("E", 6)
