from __future__ import annotations

from minorbit import (
    CapExceededError,
    CheckError,
    FixtureError,
    InvalidTypeError,
    MinorbitError,
    NonInvariantWeightError,
    ShortRootError,
)


def test_hierarchy() -> None:
    for cls in (CapExceededError, CheckError, FixtureError, InvalidTypeError, ShortRootError):
        assert issubclass(cls, MinorbitError)
    assert issubclass(InvalidTypeError, ValueError)
    assert issubclass(NonInvariantWeightError, ValueError)


def test_messages_carry_values() -> None:
    err = InvalidTypeError("E", 9, "E6, E7, E8")
    assert (err.family, err.rank) == ("E", 9)
    assert "E9" in str(err)
    assert "short" in str(ShortRootError((0, 1)))
    weight = NonInvariantWeightError([2, 1], (0, 1, 1))
    assert weight.index_set == (2, 1)
    assert "I=[1, 2]" in str(weight)
    original = KeyError("x")
    assert CheckError("golden", original).original is original
