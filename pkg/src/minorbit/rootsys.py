"""Root systems built from Cartan data, with the long-root combinatorics.

All arithmetic is exact: roots are integer coefficient vectors over the simple
roots, and the invariant form is kept doubled as the integer matrix
2(alpha_i|alpha_j) = d_j * C[i][j], normalised so that min (alpha|alpha) = 1.
"""

from __future__ import annotations

import functools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

from minorbit.config import DEFAULT, EngineConfig
from minorbit.dynkin import CartanDatum, cartan_datum
from minorbit.errors import ShortRootError

if TYPE_CHECKING:
    from collections.abc import Iterator, Sequence

    from minorbit._types import Coeffs


@dataclass(frozen=True)
class Root:
    """A root given by its coordinates over the simple roots.

    Attributes:
        coeffs: Integer coefficients n_i, all >= 0 or all <= 0.
        is_long: True when (alpha|alpha) = r.
    """

    coeffs: Coeffs
    is_long: bool

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    @property
    def is_positive(self) -> bool:
        return self.height > 0

    @property
    def label(self) -> str:
        """Compact n_1...n_r notation; negative roots carry a leading minus sign."""
        digits = "".join(str(abs(c)) for c in self.coeffs)
        return digits if self.is_positive else f"-{digits}"

    def __neg__(self) -> Root:
        return Root(tuple(-c for c in self.coeffs), self.is_long)

    def __le__(self, other: Root) -> bool:
        """Dominance order: other - self has non-negative coordinates."""
        return all(a <= b for a, b in zip(self.coeffs, other.coeffs, strict=True))

    def __repr__(self) -> str:
        return f"Root({self.label}{'' if self.is_long else ', short'})"


def level_order_key(root: Root) -> tuple[int, ...]:
    """Sort key putting roots of one level in the diagram order.

    Positive roots appear in descending lexicographic order; negative roots in
    the order of their opposites, so that complementary levels are mirror images.
    """
    return tuple(-abs(c) for c in root.coeffs)


class RootSystem:
    """Irreducible reduced root system with its derived combinatorics.

    Instances are immutable after construction; use `build` or `from_datum`.
    """

    def __init__(self, datum: CartanDatum, roots: Sequence[Root]) -> None:
        self.datum = datum
        self._form = _form_matrix(datum)
        self.roots: tuple[Root, ...] = tuple(roots)
        self._index = {root.coeffs: k for k, root in enumerate(self.roots)}
        self.positive_roots: tuple[int, ...] = tuple(
            k for k, root in enumerate(self.roots) if root.is_positive
        )
        self.highest_root: Root = max(
            (self.roots[k] for k in self.positive_roots), key=lambda root: root.height
        )
        self.coxeter_number: int = self.highest_root.height + 1
        self.dual_coxeter_number: int = int(self.dual_height(self.highest_root)) + 1
        self.i_tilde: frozenset[int] = frozenset(
            i for i in range(self.rank) if self.pairing(self.highest_root, self.simple_root(i)) == 0
        )

    @classmethod
    def from_datum(cls, datum: CartanDatum) -> RootSystem:
        """Enumerate all roots by closing the simple roots under simple reflections."""
        n = datum.rank
        c = datum.cartan_matrix
        simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        seen: set[Coeffs] = set(simple)
        queue = deque(simple)
        while queue:
            beta = queue.popleft()
            for i in range(n):
                m = sum(beta[j] * c[j][i] for j in range(n))
                if m == 0:
                    continue
                image = tuple(b - m * (1 if j == i else 0) for j, b in enumerate(beta))
                if image not in seen:
                    seen.add(image)
                    queue.append(image)
        positive = sorted((v for v in seen if sum(v) > 0), key=lambda v: (sum(v), v))
        ordered = positive + [tuple(-x for x in v) for v in positive]
        form = _form_matrix(datum)
        r2 = 2 * max(datum.symmetrizer)
        roots = [Root(v, _form2(form, v, v) == r2) for v in ordered]
        return cls(datum, roots)

    # --- basic data ---

    @property
    def family(self) -> str:
        return self.datum.family

    @property
    def rank(self) -> int:
        return self.datum.rank

    @property
    def name(self) -> str:
        return self.datum.name

    @property
    def r(self) -> int:
        return self.datum.r

    @property
    def h(self) -> int:
        return self.coxeter_number

    @property
    def h_dual(self) -> int:
        return self.dual_coxeter_number

    def __repr__(self) -> str:
        return f"RootSystem({self.name}, |Phi|={len(self.roots)})"

    def __iter__(self) -> Iterator[Root]:
        return iter(self.roots)

    def __len__(self) -> int:
        return len(self.roots)

    def simple_root(self, i: int) -> Root:
        return self.roots[self._index[tuple(1 if j == i else 0 for j in range(self.rank))]]

    @property
    def simple_long_indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.rank) if self.datum.is_long_simple(i))

    @property
    def long_roots(self) -> tuple[Root, ...]:
        return tuple(root for root in self.roots if root.is_long)

    @property
    def positive_long_roots(self) -> tuple[Root, ...]:
        return tuple(root for root in self.long_roots if root.is_positive)

    def index(self, root: Root | Coeffs) -> int:
        """Position of a root in `roots`. Raises KeyError for non-roots."""
        coeffs = root.coeffs if isinstance(root, Root) else tuple(root)
        return self._index[coeffs]

    def get(self, coeffs: Sequence[int]) -> Root | None:
        k = self._index.get(tuple(coeffs))
        return None if k is None else self.roots[k]

    def __contains__(self, item: object) -> bool:
        if isinstance(item, Root):
            return item.coeffs in self._index
        return isinstance(item, tuple) and item in self._index

    # --- bilinear form and reflections ---

    def inner(self, beta: Root, gamma: Root) -> Fraction:
        """The invariant form (beta|gamma)."""
        return Fraction(_form2(self._form, beta.coeffs, gamma.coeffs), 2)

    def pairing(self, beta: Root, gamma: Root) -> int:
        """<beta, gamma^vee> = 2(beta|gamma)/(gamma|gamma), always an integer on roots."""
        num = 2 * _form2(self._form, beta.coeffs, gamma.coeffs)
        den = _form2(self._form, gamma.coeffs, gamma.coeffs)
        q, rem = divmod(num, den)
        if rem:
            raise ArithmeticError(f"non-integral pairing <{beta.label}, {gamma.label}v>")
        return q

    def reflect(self, gamma: Root, beta: Root) -> Root:
        """s_gamma(beta) = beta - <beta, gamma^vee> gamma."""
        m = self.pairing(beta, gamma)
        image = tuple(b - m * g for b, g in zip(beta.coeffs, gamma.coeffs, strict=True))
        return self.roots[self._index[image]]

    def fundamental_weight_coords(self, beta: Root) -> tuple[int, ...]:
        """Coordinates of beta over the fundamental weights: (<beta, alpha_i^vee>)_i."""
        c = self.datum.cartan_matrix
        return tuple(
            sum(beta.coeffs[j] * c[j][i] for j in range(self.rank)) for i in range(self.rank)
        )

    def coroot_coefficients(self, beta: Root) -> tuple[int, ...]:
        """Coordinates of beta^vee over the simple coroots."""
        norm = self.inner(beta, beta)
        coeffs = [n * d / norm for n, d in zip(beta.coeffs, self.datum.symmetrizer, strict=True)]
        return tuple(int(x) for x in coeffs)

    # --- heights and levels ---

    def dual_height(self, alpha: Root) -> Fraction:
        """ht(alpha^vee) = sum of long coordinates + (1/r) * sum of short coordinates."""
        r = self.r
        total = Fraction(0)
        for i, n in enumerate(alpha.coeffs):
            total += n if self.datum.is_long_simple(i) else Fraction(n, r)
        return total

    def level(self, alpha: Root) -> int:
        """Distance of a long root below the highest root in the cover poset.

        Raises:
            ShortRootError: If alpha is short.
        """
        if not alpha.is_long:
            raise ShortRootError(alpha.coeffs)
        return _level_table(self)[alpha.coeffs]

    @property
    def max_level(self) -> int:
        """2 h^vee - 3, the level of -highest_root and the dimension of G/P_I~."""
        return 2 * self.dual_coxeter_number - 3

    # --- subsystems ---

    def long_simple_subsystem(self) -> RootSystem:
        """The root system generated by the long simple roots (always simply laced)."""
        idx = self.simple_long_indices
        if len(idx) == self.rank:
            return self
        c = self.datum.cartan_matrix
        sub = tuple(tuple(c[i][j] for j in idx) for i in idx)
        datum = CartanDatum(
            family="A",
            rank=len(idx),
            cartan_matrix=sub,
            symmetrizer=tuple(Fraction(1) for _ in idx),
        )
        if sub != cartan_datum("A", len(idx)).cartan_matrix:
            raise ArithmeticError(f"long simple roots of {self.name} do not form a chain")
        return RootSystem.from_datum(datum)


@functools.lru_cache(maxsize=64)
def build(family: str, rank: int, config: EngineConfig = DEFAULT) -> RootSystem:
    """Construct the root system of type family_rank.

    Raises:
        InvalidTypeError: If the type is not one of the simple types within the rank bounds.
    """
    return RootSystem.from_datum(cartan_datum(family, rank, config))


def _form_matrix(datum: CartanDatum) -> tuple[tuple[int, ...], ...]:
    # 2(alpha_i|alpha_j) = d_j C[i][j], integral since every d_j is
    c, d = datum.cartan_matrix, datum.symmetrizer
    n = datum.rank
    return tuple(tuple(int(d[j] * c[i][j]) for j in range(n)) for i in range(n))


def _form2(form: tuple[tuple[int, ...], ...], u: Coeffs, v: Coeffs) -> int:
    """2(u|v) for coefficient vectors u, v."""
    total = 0
    for i, a in enumerate(u):
        if a:
            row = form[i]
            total += a * sum(b * row[j] for j, b in enumerate(v) if b)
    return total


@functools.lru_cache(maxsize=64)
def _level_table(rs: RootSystem) -> dict[Coeffs, int]:
    top = rs.dual_height(rs.highest_root)
    table: dict[Coeffs, int] = {}
    for root in rs.long_roots:
        value = top - rs.dual_height(root)
        if not root.is_positive:
            value -= 1
        table[root.coeffs] = int(value)
    return table
