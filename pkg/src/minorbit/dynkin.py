"""Cartan data, Weyl-group degrees and bad primes for every simple type.

Simple roots are numbered as in the per-type Dynkin diagrams: Bourbaki
numbering throughout, with alpha_n short in B_n, alpha_n long in C_n, the
branch of D_n at alpha_{n-2}, alpha_2 hanging off alpha_4 in E_6,7,8,
alpha_1, alpha_2 long in F_4 and alpha_1 long in G_2.

Convention: C[i][j] = <alpha_i, alpha_j^vee>, so that
s_j(alpha_i) = alpha_i - C[i][j] alpha_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

from minorbit.config import DEFAULT, EngineConfig
from minorbit.errors import InvalidTypeError

if TYPE_CHECKING:
    from minorbit._types import Rows

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True)
class CartanDatum:
    """Cartan matrix of an irreducible reduced root system plus its symmetrizer.

    Attributes:
        family: One of A, B, C, D, E, F, G.
        rank: Number of simple roots.
        cartan_matrix: rank x rank matrix with C[i][j] = <alpha_i, alpha_j^vee>.
        symmetrizer: Squared lengths (alpha_j|alpha_j), normalised so that the minimum is 1.
    """

    family: str
    rank: int
    cartan_matrix: Rows
    symmetrizer: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        c, d, n = self.cartan_matrix, self.symmetrizer, self.rank
        if len(c) != n or any(len(row) != n for row in c) or len(d) != n:
            raise ValueError(f"{self.name}: Cartan data has inconsistent dimensions")
        for i in range(n):
            if c[i][i] != 2:
                raise ValueError(f"{self.name}: diagonal entry C[{i}][{i}] = {c[i][i]} != 2")
            for j in range(n):
                if i == j:
                    continue
                if c[i][j] > 0 or (c[i][j] == 0) != (c[j][i] == 0):
                    raise ValueError(f"{self.name}: bad off-diagonal pair at ({i}, {j})")
                if d[j] * c[i][j] != d[i] * c[j][i]:
                    raise ValueError(f"{self.name}: symmetrizer does not symmetrize ({i}, {j})")
        if min(d) != 1 or max(d) not in (1, 2, 3):
            raise ValueError(f"{self.name}: squared lengths {d} are not normalised")

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def r(self) -> int:
        """Ratio of squared lengths of long and short roots."""
        return int(max(self.symmetrizer))

    def is_long_simple(self, i: int) -> bool:
        return self.symmetrizer[i] == max(self.symmetrizer)


def valid_ranges(config: EngineConfig = DEFAULT) -> str:
    """Describe the accepted (family, rank) pairs for diagnostics."""
    return (
        f"A1..A{config.max_rank_a}, B2..B{config.max_rank_classical}, "
        f"C2..C{config.max_rank_classical}, D3..D{config.max_rank_classical}, "
        f"E6, E7, E8, F4, G2"
    )


def validate_type(family: str, rank: int, config: EngineConfig = DEFAULT) -> None:
    """Raise InvalidTypeError unless (family, rank) names a simple type within the limits."""
    family = family.upper()
    if family in _EXCEPTIONAL_RANKS:
        ok = rank in _EXCEPTIONAL_RANKS[family]
    elif family in _MIN_RANK:
        upper = config.max_rank(family)
        ok = _MIN_RANK[family] <= rank and (upper is None or rank <= upper)
    else:
        ok = False
    if not ok:
        raise InvalidTypeError(family, rank, valid_ranges(config))


def _chain(n: int) -> list[list[int]]:
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2
        if i + 1 < n:
            c[i][i + 1] = c[i + 1][i] = -1
    return c


def _e_series(n: int) -> list[list[int]]:
    # alpha_1 - alpha_3 - alpha_4 - ... - alpha_n with alpha_2 attached to alpha_4
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2
    bonds = [(0, 2), (1, 3)] + [(k, k + 1) for k in range(2, n - 1)]
    for i, j in bonds:
        c[i][j] = c[j][i] = -1
    return c


def cartan_datum(family: str, rank: int, config: EngineConfig = DEFAULT) -> CartanDatum:
    """Build the Cartan datum of type family_rank in the diagram numbering.

    Raises:
        InvalidTypeError: If the type is not simple or exceeds the configured rank bounds.
    """
    family = family.upper()
    validate_type(family, rank, config)
    n = rank
    one, two, three = Fraction(1), Fraction(2), Fraction(3)

    if family == "A":
        c, d = _chain(n), [one] * n
    elif family == "B":
        c = _chain(n)
        c[n - 2][n - 1] = -2
        d = [two] * (n - 1) + [one]
    elif family == "C":
        c = _chain(n)
        c[n - 1][n - 2] = -2
        d = [one] * (n - 1) + [two]
    elif family == "D":
        c = _chain(n)
        c[n - 2][n - 1] = c[n - 1][n - 2] = 0
        c[n - 3][n - 1] = c[n - 1][n - 3] = -1
        d = [one] * n
    elif family == "E":
        c, d = _e_series(n), [one] * n
    elif family == "F":
        c = _chain(4)
        c[1][2] = -2
        d = [two, two, one, one]
    else:
        c = _chain(2)
        c[0][1] = -3
        d = [three, one]

    return CartanDatum(
        family=family,
        rank=n,
        cartan_matrix=tuple(tuple(row) for row in c),
        symmetrizer=tuple(d),
    )


def weyl_degrees(family: str, rank: int) -> tuple[int, ...]:
    """Degrees of the basic invariants of the Weyl group, in increasing order."""
    family = family.upper()
    n = rank
    if family == "A":
        degrees = list(range(2, n + 2))
    elif family in ("B", "C"):
        degrees = list(range(2, 2 * n + 1, 2))
    elif family == "D":
        degrees = list(range(2, 2 * n - 1, 2)) + [n]
    elif family == "E":
        degrees = {
            6: [2, 5, 6, 8, 9, 12],
            7: [2, 6, 8, 10, 12, 14, 18],
            8: [2, 8, 12, 14, 18, 20, 24, 30],
        }[n]
    elif family == "F":
        degrees = [2, 6, 8, 12]
    else:
        degrees = [2, 6]
    return tuple(sorted(degrees))


def bad_primes(family: str, rank: int) -> frozenset[int]:
    """Primes dividing a coefficient of the highest root."""
    family = family.upper()
    if family == "A":
        return frozenset()
    if family in ("B", "C", "D"):
        return frozenset({2})
    if family == "E" and rank == 8:
        return frozenset({2, 3, 5})
    return frozenset({2, 3})
