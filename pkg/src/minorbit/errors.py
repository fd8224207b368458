"""Engine-specific exceptions. Minimal set; arithmetic bugs surface as plain exceptions."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from collections.abc import Sequence


class MinorbitError(Exception):
    """Base exception for all minorbit errors."""

    pass


class InvalidTypeError(MinorbitError, ValueError):
    """Raised when a (family, rank) pair does not name a simple root system.

    Attributes:
        family: The requested family letter.
        rank: The requested rank.
        valid: Human-readable description of the accepted ranges.
    """

    def __init__(self, family: str, rank: int, valid: str) -> None:
        self.family = family
        self.rank = rank
        self.valid = valid
        super().__init__(f"Invalid root system type {family}{rank}: valid types are {valid}")


class ShortRootError(MinorbitError, ValueError):
    """Raised when an operation defined only on long roots receives a short one."""

    def __init__(self, coeffs: Sequence[int]) -> None:
        self.coeffs = tuple(coeffs)
        label = "".join(str(c) for c in self.coeffs)
        super().__init__(f"Root {label} is short; levels are defined on long roots only")


class CapExceededError(MinorbitError):
    """Raised when a coset enumeration would grow past its configured cap.

    Attributes:
        cap: The configured maximum number of coset representatives.
        partial_count: Number of representatives found before giving up.
    """

    def __init__(self, cap: int, partial_count: int) -> None:
        self.cap = cap
        self.partial_count = partial_count
        super().__init__(
            f"Coset enumeration exceeded cap={cap} after {partial_count} representatives; "
            f"raise it with --cap"
        )


class NonInvariantWeightError(MinorbitError, ValueError):
    """Raised when a character is not invariant under the parabolic subgroup W_I."""

    def __init__(self, index_set: Sequence[int], coords: Sequence[int]) -> None:
        self.index_set = tuple(index_set)
        self.coords = tuple(coords)
        super().__init__(
            f"Weight {list(self.coords)} is not W_I-invariant for I={sorted(self.index_set)}"
        )


class CheckError(MinorbitError):
    """Raised when a verification check crashes instead of returning an outcome.

    Attributes:
        check_name: Name of the failed check.
        original: The original exception raised inside the check.
    """

    def __init__(self, check_name: str, original: Exception) -> None:
        self.check_name = check_name
        self.original = original
        super().__init__(f"Check '{check_name}' raised: {original}")


class FixtureError(MinorbitError):
    """Raised when the bundled golden data cannot be read or is inconsistent."""

    def __init__(self, source: str, reason: str) -> None:
        self.source = source
        self.reason = reason
        super().__init__(f"Bad fixture data in {source}: {reason}")
