"""The @check decorator, the building block of verification suites.

A check wraps a function `(RootSystem) -> CheckOutcome | bool`. Called
directly it behaves exactly like the function; `execute` (used by Suite)
normalises the result and wraps crashes in CheckError.
"""

from __future__ import annotations

import copy
import functools
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, overload

from minorbit.errors import CheckError

if TYPE_CHECKING:
    from collections.abc import Callable, Iterator

    from minorbit.rootsys import RootSystem

    CheckFn = Callable[..., "CheckOutcome | bool"]
    Predicate = Callable[[RootSystem], bool]


@dataclass(frozen=True)
class CheckOutcome:
    """Result of one check on one root system."""

    passed: bool
    detail: str = ""

    @classmethod
    def ok(cls, detail: str = "") -> CheckOutcome:
        return cls(True, detail)

    @classmethod
    def fail(cls, detail: str) -> CheckOutcome:
        return cls(False, detail)

    @classmethod
    def expect_equal(cls, what: str, got: object, expected: object) -> CheckOutcome:
        if got == expected:
            return cls.ok()
        return cls.fail(f"{what}: got {got}, expected {expected}")


class Check:
    """A named verification function with an applicability predicate.

    Attributes:
        fn: The original function.
        name: Check name (defaults to the function name).
        when: Predicate on the root system; the check is skipped when it returns False.
    """

    def __init__(self, fn: CheckFn, *, name: str | None = None, when: Predicate | None = None):
        if not callable(fn):
            raise TypeError(f"@check requires a callable, got {type(fn).__name__}")
        self.fn = fn
        self.name = name or fn.__name__
        self.when = when
        functools.update_wrapper(self, fn)

    def __call__(self, *args: Any, **kwargs: Any) -> CheckOutcome | bool:
        return self.fn(*args, **kwargs)

    def applies_to(self, rs: RootSystem) -> bool:
        return self.when is None or self.when(rs)

    def execute(self, rs: RootSystem, **kwargs: Any) -> CheckOutcome:
        """Run on rs and normalise the result.

        Raises:
            CheckError: If the function raises.
        """
        try:
            result = self.fn(rs, **kwargs)
        except Exception as e:
            raise CheckError(self.name, e) from e
        if isinstance(result, CheckOutcome):
            return result
        return CheckOutcome(bool(result), "" if result else "returned False")

    def where(self, predicate: Predicate) -> Check:
        """A copy of this check restricted to root systems satisfying predicate."""
        restricted = copy.copy(self)
        restricted.when = predicate
        return restricted

    def bind(self, **kwargs: Any) -> BoundCheck:
        """Partially apply keyword arguments, e.g. `oracle_edges.bind(cap=500)`."""
        return BoundCheck(self, kwargs)

    def __rshift__(self, other: Check | CheckSequence) -> CheckSequence:
        if isinstance(other, CheckSequence):
            return CheckSequence([self, *other.checks])
        if isinstance(other, Check):
            return CheckSequence([self, other])
        return NotImplemented

    def __repr__(self) -> str:
        return f"Check({self.name})"


class BoundCheck(Check):
    """A check with pre-bound keyword arguments."""

    def __init__(self, original: Check, bound_kwargs: dict[str, Any]) -> None:
        self._original = original
        self._bound_kwargs = bound_kwargs
        self.fn = original.fn
        self.name = original.name
        self.when = original.when

    def __call__(self, *args: Any, **kwargs: Any) -> CheckOutcome | bool:
        return self._original.fn(*args, **{**self._bound_kwargs, **kwargs})

    def execute(self, rs: RootSystem, **kwargs: Any) -> CheckOutcome:
        return self._original.execute(rs, **{**self._bound_kwargs, **kwargs})


class CheckSequence:
    """An ordered list of checks created by the >> operator."""

    def __init__(self, checks: list[Check]) -> None:
        self.checks = checks

    def __rshift__(self, other: Check | CheckSequence) -> CheckSequence:
        if isinstance(other, CheckSequence):
            return CheckSequence(self.checks + other.checks)
        if isinstance(other, Check):
            return CheckSequence([*self.checks, other])
        return NotImplemented

    def __iter__(self) -> Iterator[Check]:
        return iter(self.checks)

    def __len__(self) -> int:
        return len(self.checks)

    def __repr__(self) -> str:
        return " >> ".join(c.name for c in self.checks)


@overload
def check(fn: CheckFn) -> Check: ...


@overload
def check(
    *, name: str | None = None, when: Predicate | None = None
) -> Callable[[CheckFn], Check]: ...


def check(
    fn: CheckFn | None = None,
    *,
    name: str | None = None,
    when: Predicate | None = None,
) -> Check | Callable[[CheckFn], Check]:
    """Decorator turning `(RootSystem) -> CheckOutcome | bool` into a Check.

        @check
        def transpose_duality(rs: RootSystem) -> CheckOutcome: ...

        @check(when=lambda rs: rs.rank <= 6)
        def oracle_edges(rs: RootSystem, cap: int = 10_000) -> bool: ...
    """
    if fn is not None:
        return Check(fn, name=name, when=when)

    def decorator(f: CheckFn) -> Check:
        return Check(f, name=name, when=when)

    return decorator
