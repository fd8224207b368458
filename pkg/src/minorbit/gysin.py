"""Graded integral cohomology from the Gysin sequence of a C*-bundle.

Degree bookkeeping for a base with Schubert cells in complex dimensions
0..d-1 (d levels) and Chern-class matrices D_i: H^{2i-2} -> H^{2i}:

    ===========  ==============================  =========================
    degree n     group                            matrix
    ===========  ==============================  =========================
    even, n<2d   coker D_{n/2}                    D_0 has no columns
    odd, n<2d    Z^(kernel rank of D_{(n+1)/2})   D_d has no rows
    n >= 2d      0
    ===========  ==============================  =========================

For the minimal orbit the base is G/P_I~, d = 2h^vee - 2 and the top degree
is 2d - 1 = 4h^vee - 5; the middle degree 2h^vee - 2 carries P^vee/Q^vee of
the root system spanned by the long simple roots.
"""

from __future__ import annotations

import functools
import logging
from collections import Counter
from dataclasses import dataclass
from typing import TYPE_CHECKING

from minorbit.check import CheckOutcome, check
from minorbit.dynkin import bad_primes, weyl_degrees
from minorbit.errors import NonInvariantWeightError
from minorbit.orbitposet import build_level_diagram, differential_matrix
from minorbit.suite import Suite
from minorbit.weyl import WeylGroup
from minorbit.zlinalg import FGAbelianGroup, IntMatrix, cokernel, kernel_rank

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable, Iterator, Mapping

    from minorbit.rootsys import Root, RootSystem
    from minorbit.suite import SuiteReport
    from minorbit.tracer import Tracer

logger = logging.getLogger(__name__)

ZERO = FGAbelianGroup()


@dataclass(frozen=True)
class GradedCohomology:
    """H^n for n = 0..top_degree; degrees not listed in `groups` carry the zero group.

    Attributes:
        family: Family letter of the root system.
        rank: Its rank.
        h_dual: Its dual Coxeter number.
        top_degree: Largest degree that may be nonzero.
        groups: (degree, group) pairs for the nonzero groups, by increasing degree.
    """

    family: str
    rank: int
    h_dual: int
    top_degree: int
    groups: tuple[tuple[int, FGAbelianGroup], ...]

    @classmethod
    def from_mapping(
        cls, family: str, rank: int, h_dual: int, top_degree: int,
        groups: Mapping[int, FGAbelianGroup],
    ) -> GradedCohomology:
        kept = tuple(sorted((n, g) for n, g in groups.items() if not g.is_zero))
        return cls(family, rank, h_dual, top_degree, kept)

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def __getitem__(self, degree: int) -> FGAbelianGroup:
        for n, g in self.groups:
            if n == degree:
                return g
        return ZERO

    def __iter__(self) -> Iterator[tuple[int, FGAbelianGroup]]:
        return iter(self.groups)

    def degrees(self) -> tuple[int, ...]:
        """Degrees with a nonzero group."""
        return tuple(n for n, _ in self.groups)

    def as_dict(self) -> dict[int, FGAbelianGroup]:
        return dict(self.groups)


@dataclass(frozen=True)
class CharacterWeight:
    """A character given by its coordinates over the fundamental weights."""

    coords: tuple[int, ...]

    @classmethod
    def from_root(cls, rs: RootSystem, root: Root) -> CharacterWeight:
        return cls(rs.fundamental_weight_coords(root))

    @classmethod
    def fundamental(cls, rs: RootSystem, i: int) -> CharacterWeight:
        return cls(tuple(int(j == i) for j in range(rs.rank)))

    @classmethod
    def zero(cls, rs: RootSystem) -> CharacterWeight:
        return cls((0,) * rs.rank)

    def is_invariant(self, index_set: Iterable[int]) -> bool:
        """W_I-invariance: every coordinate indexed by I vanishes."""
        return all(self.coords[i] == 0 for i in index_set)

    def pair_coroot(self, coroot: tuple[int, ...]) -> int:
        """<lambda, beta^vee> from the coordinates of beta^vee over the simple coroots."""
        return sum(c * n for c, n in zip(self.coords, coroot, strict=True))


def assemble(depth: int, matrix: Callable[[int], IntMatrix]) -> dict[int, FGAbelianGroup]:
    """Apply the even/odd rules to the matrices D_0..D_depth."""
    groups: dict[int, FGAbelianGroup] = {}
    for n in range(2 * depth):
        if n % 2 == 0:
            groups[n] = cokernel(matrix(n // 2))
        else:
            groups[n] = FGAbelianGroup.free(kernel_rank(matrix((n + 1) // 2)))
    return groups


@functools.lru_cache(maxsize=32)
def minimal_orbit_cohomology(rs: RootSystem) -> GradedCohomology:
    """H^*(O_min, Z) from the long-root level diagram."""
    diagram = build_level_diagram(rs)
    groups = assemble(diagram.depth, lambda i: differential_matrix(diagram, i).matrix)
    logger.debug("%s: cohomology assembled in %d degrees", rs.name, 2 * diagram.depth)
    return GradedCohomology.from_mapping(
        rs.family, rs.rank, rs.h_dual, 2 * diagram.depth - 1, groups
    )


def middle_degree(rs: RootSystem) -> int:
    return 2 * rs.h_dual - 2


def middle_group(rs: RootSystem) -> FGAbelianGroup:
    """P^vee/Q^vee of the subsystem spanned by the long simple roots."""
    sub = rs.long_simple_subsystem()
    return cokernel(IntMatrix.from_rows(sub.datum.cartan_matrix))


def schubert_basis_sizes(rs: RootSystem) -> tuple[int, ...]:
    """Ranks of H^{2i}(G/P_I~) for i = 0..2h^vee - 3, the level histogram."""
    return build_level_diagram(rs).level_sizes()


def rational_betti(cohomology: GradedCohomology) -> dict[int, int]:
    """Free ranks by degree, omitting zeros."""
    return {n: g.free_rank for n, g in cohomology if g.free_rank}


def euler_characteristic(cohomology: GradedCohomology) -> int:
    return sum((-1) ** n * g.free_rank for n, g in cohomology)


def line_bundle_cohomology(
    rs: RootSystem,
    index_set: Iterable[int],
    weight: CharacterWeight,
    cap: int | None = None,
) -> GradedCohomology:
    """H^*(L*_I(lambda), Z) for the complement of the zero section of L_I(lambda) on G/P_I.

    The matrix entries are the Pieri coefficients <w(lambda), gamma^vee> over the
    covers w -> s_gamma w inside X_I.

    Raises:
        NonInvariantWeightError: If the weight is not W_I-invariant.
        CapExceededError: If |X_I| exceeds `cap`.
    """
    index = frozenset(index_set)
    if not weight.is_invariant(index):
        raise NonInvariantWeightError(sorted(index), weight.coords)

    weyl = WeylGroup(rs)
    family = weyl.coset_reps(index, cap)
    by_length = family.by_length()
    depth = max(by_length) + 1
    reflections = {weyl.reflection(rs.roots[k]).perm: k for k in rs.positive_roots}
    coroots = {k: rs.coroot_coefficients(rs.roots[k]) for k in range(len(rs.roots))}

    def matrix(i: int) -> IntMatrix:
        rows = by_length.get(i, []) if i < depth else []
        cols = by_length.get(i - 1, []) if i >= 1 else []
        entries = [[0] * len(cols) for _ in rows]
        for b, w in enumerate(cols):
            w_inv = weyl.inverse(w)
            for a, w2 in enumerate(rows):
                gamma = reflections.get(weyl.compose(w2, w_inv).perm)
                if gamma is not None:
                    entries[a][b] = weight.pair_coroot(coroots[w_inv.perm[gamma]])
        return IntMatrix.from_rows(entries, cols=len(cols))

    groups = assemble(depth, matrix)
    return GradedCohomology.from_mapping(rs.family, rs.rank, rs.h_dual, 2 * depth - 1, groups)


# --- profile checks ---


@check
def rational_profile(rs: RootSystem) -> CheckOutcome:
    """Free ranks in degrees <= 2h^vee - 3 sit at 2(d_i - 2) for the first |long simple| degrees."""
    cohomology = minimal_orbit_cohomology(rs)
    limit = 2 * rs.h_dual - 3
    got = Counter({n: r for n, r in rational_betti(cohomology).items() if n <= limit})
    k = len(rs.simple_long_indices)
    expected = Counter(2 * (d - 2) for d in weyl_degrees(rs.family, rs.rank)[:k])
    return CheckOutcome.expect_equal("lower-half free ranks", dict(got), dict(expected))


@check
def bad_prime_torsion(rs: RootSystem) -> CheckOutcome:
    """Torsion primes away from the middle degree are bad primes."""
    cohomology = minimal_orbit_cohomology(rs)
    allowed = bad_primes(rs.family, rs.rank)
    middle = middle_degree(rs)
    offending = {
        n: sorted(g.torsion_primes() - allowed) for n, g in cohomology if n != middle
    }
    offending = {n: ps for n, ps in offending.items() if ps}
    if offending:
        return CheckOutcome.fail(f"good-prime torsion at {offending}")
    return CheckOutcome.ok()


@check
def transpose_duality(rs: RootSystem) -> CheckOutcome:
    """D_{d-i} is the transpose of D_i."""
    diagram = build_level_diagram(rs)
    d = diagram.depth
    for i in range(d + 1):
        lhs = differential_matrix(diagram, d - i).matrix
        rhs = differential_matrix(diagram, i).matrix.transpose()
        if lhs != rhs:
            return CheckOutcome.fail(f"D_{d - i} != transpose(D_{i})")
    return CheckOutcome.ok()


PROFILE_CHECKS = rational_profile >> bad_prime_torsion >> transpose_duality


def verify_profiles(rs: RootSystem, tracer: Tracer | None = None) -> SuiteReport:
    """Run the Betti-profile, bad-prime and transpose checks on rs."""
    suite = Suite("profiles")
    if tracer is not None:
        suite.use(tracer)
    return suite.run(PROFILE_CHECKS, rs)
