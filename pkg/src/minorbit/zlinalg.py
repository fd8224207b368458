"""Exact integer linear algebra: Smith normal form, kernels and cokernels.

Entries are Python ints throughout, so elimination never overflows. The
elimination pivots on the entry of minimal absolute value and uses row and
column swaps; no unimodular transforms are recorded.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, NamedTuple

import sympy

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    from minorbit._types import Rows


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix. Zero-row and zero-column shapes are allowed.

    Attributes:
        rows: Number of rows.
        cols: Number of columns.
        entries: Row-major entries, `rows` tuples of length `cols`.
    """

    rows: int
    cols: int
    entries: Rows

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError(f"negative matrix shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError(f"entries do not match shape {self.rows}x{self.cols}")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> IntMatrix:
        """Build from nested sequences. `cols` is required when there are no rows."""
        entries = tuple(tuple(int(x) for x in row) for row in rows)
        if cols is None:
            if not entries:
                raise ValueError("cols must be given for a matrix without rows")
            cols = len(entries[0])
        return cls(len(entries), cols, entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, k: int) -> IntMatrix:
        return cls(k, k, tuple(tuple(int(i == j) for j in range(k)) for i in range(k)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self.entries[i][j]

    def transpose(self) -> IntMatrix:
        columns = tuple(tuple(row[j] for row in self.entries) for j in range(self.cols))
        return IntMatrix(self.cols, self.rows, columns)

    @property
    def T(self) -> IntMatrix:  # noqa: N802
        return self.transpose()

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def __str__(self) -> str:
        if self.rows == 0 or self.cols == 0:
            return f"({self.rows}x{self.cols})"
        return "[" + ", ".join("[" + ", ".join(map(str, row)) + "]" for row in self.entries) + "]"


@dataclass(frozen=True)
class FGAbelianGroup:
    """Finitely generated abelian group Z^free_rank + Z/d_1 + ... + Z/d_k.

    Attributes:
        free_rank: Rank of the free part.
        torsion: Invariant factors d_1 | d_2 | ..., each at least 2.
    """

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise ValueError(f"free_rank must be non-negative, got {self.free_rank}")
        if any(d < 2 for d in self.torsion):
            raise ValueError(f"torsion coefficients must be >= 2, got {self.torsion}")
        for a, b in itertools.pairwise(self.torsion):
            if b % a:
                raise ValueError(f"torsion {self.torsion} is not a divisibility chain")

    @classmethod
    def free(cls, rank: int) -> FGAbelianGroup:
        return cls(free_rank=rank)

    @classmethod
    def cyclic(cls, order: int) -> FGAbelianGroup:
        """Z/order; order 1 gives the zero group, order 0 gives Z."""
        if order == 0:
            return cls(free_rank=1)
        return cls() if abs(order) == 1 else cls(torsion=(abs(order),))

    @classmethod
    def from_primary(cls, free_rank: int, prime_powers: Iterable[int]) -> FGAbelianGroup:
        """Reassemble invariant factors from a list of prime-power cyclic orders."""
        by_prime: dict[int, list[int]] = {}
        for q in prime_powers:
            (p,) = sympy.factorint(q)
            by_prime.setdefault(int(p), []).append(q)
        length = max((len(v) for v in by_prime.values()), default=0)
        factors = [1] * length
        for powers in by_prime.values():
            for k, q in enumerate(sorted(powers, reverse=True)):
                factors[length - 1 - k] *= q
        return cls(free_rank, tuple(d for d in factors if d > 1))

    @property
    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        """Number of elements, or None for infinite groups."""
        return math.prod(self.torsion) if self.is_finite else None

    def torsion_primes(self) -> frozenset[int]:
        return frozenset(int(p) for d in self.torsion for p in sympy.primefactors(d))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts)


class SmithForm(NamedTuple):
    """Nonzero invariant factors in divisibility order, and the rank."""

    divisors: tuple[int, ...]
    rank: int


def snf(m: IntMatrix) -> SmithForm:
    """Compute the invariant factors of m by pivoting on minimal absolute values."""
    a = m.to_lists()
    nrows, ncols = m.rows, m.cols
    divisors: list[int] = []
    s = 0
    while s < min(nrows, ncols):
        pivot = _min_abs_entry(a, s)
        if pivot is None:
            break
        i0, j0 = pivot
        a[s], a[i0] = a[i0], a[s]
        for row in a:
            row[s], row[j0] = row[j0], row[s]

        p = a[s][s]
        for i in range(s + 1, nrows):
            if a[i][s]:
                q = a[i][s] // p
                a[i] = [x - q * y for x, y in zip(a[i], a[s], strict=True)]
        for j in range(s + 1, ncols):
            if a[s][j]:
                q = a[s][j] // p
                for row in a:
                    row[j] -= q * row[s]

        if any(a[i][s] for i in range(s + 1, nrows)) or any(a[s][j] for j in range(s + 1, ncols)):
            continue

        bad_row = next(
            (i for i in range(s + 1, nrows) for j in range(s + 1, ncols) if a[i][j] % p),
            None,
        )
        if bad_row is not None:
            a[s] = [x + y for x, y in zip(a[s], a[bad_row], strict=True)]
            continue

        divisors.append(abs(p))
        s += 1
    return SmithForm(tuple(divisors), len(divisors))


def _min_abs_entry(a: list[list[int]], s: int) -> tuple[int, int] | None:
    best: tuple[int, int] | None = None
    best_val = 0
    for i in range(s, len(a)):
        row = a[i]
        for j in range(s, len(row)):
            v = abs(row[j])
            if v and (best is None or v < best_val):
                best, best_val = (i, j), v
                if v == 1:
                    return best
    return best


def rank(m: IntMatrix) -> int:
    return snf(m).rank


def transpose(m: IntMatrix) -> IntMatrix:
    return m.transpose()


def cokernel(m: IntMatrix) -> FGAbelianGroup:
    """Z^rows / image(m)."""
    form = snf(m)
    return FGAbelianGroup(m.rows - form.rank, tuple(d for d in form.divisors if d > 1))


def kernel_rank(m: IntMatrix) -> int:
    """Rank of the (free) kernel of m: Z^cols -> Z^rows."""
    return m.cols - snf(m).rank


def determinantal_divisors(m: IntMatrix, k_max: int = 3) -> tuple[int, ...]:
    """gcd of all k x k minors for k = 1..min(k_max, rows, cols); 0 when all vanish.

    Independent of `snf`: the product of the first k invariant factors equals the k-th entry.
    """
    if not m.rows or not m.cols:
        return ()
    sm = sympy.Matrix(m.to_lists())
    out: list[int] = []
    for k in range(1, min(k_max, m.rows, m.cols) + 1):
        g = 0
        for rows in itertools.combinations(range(m.rows), k):
            for cols in itertools.combinations(range(m.cols), k):
                g = math.gcd(g, int(sm.extract(list(rows), list(cols)).det()))
        out.append(g)
    return tuple(out)


def primary_decomposition(group: FGAbelianGroup) -> tuple[int, ...]:
    """Orders of the prime-power cyclic factors of the torsion, sorted by prime then power."""
    powers = [
        int(p) ** int(e) for d in group.torsion for p, e in sympy.factorint(d).items()
    ]
    return tuple(sorted(powers, key=lambda q: (min(sympy.primefactors(q)), q)))
