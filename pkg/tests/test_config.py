from __future__ import annotations

import dataclasses

import pytest

from minorbit import DEFAULT, QUICK, THOROUGH, EngineConfig


def test_presets() -> None:
    assert DEFAULT.coset_cap == 10_000
    assert DEFAULT.max_rank("A") == 32
    assert DEFAULT.max_rank("D") == 16
    assert DEFAULT.max_rank("E") is None
    assert QUICK.sweep_max_rank < DEFAULT.sweep_max_rank < THOROUGH.sweep_max_rank
    assert THOROUGH.coset_cap > DEFAULT.coset_cap


def test_config_is_frozen() -> None:
    with pytest.raises(dataclasses.FrozenInstanceError):
        DEFAULT.coset_cap = 5  # type: ignore[misc]


@pytest.mark.parametrize("field", ["coset_cap", "sweep_max_rank", "sweep_max_rank_a"])
def test_config_validation(field: str) -> None:
    with pytest.raises(ValueError):
        EngineConfig(**{field: 0})
