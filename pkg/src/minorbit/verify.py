"""The verification checks behind `minorbit verify`.

Each check takes a root system and returns a CheckOutcome. `standard_checks`
assembles them into the sequence run by the CLI, with the Weyl-side oracles
restricted to small ranks; `sweep` lists the root systems visited by `all`.
"""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

from minorbit.check import CheckOutcome, check
from minorbit.config import DEFAULT, EngineConfig
from minorbit.fixtures import (
    EXCEPTIONAL,
    expected_cohomology,
    expected_matrices,
    expected_middle_group,
)
from minorbit.gysin import (
    CharacterWeight,
    bad_prime_torsion,
    euler_characteristic,
    line_bundle_cohomology,
    middle_degree,
    middle_group,
    minimal_orbit_cohomology,
    rational_profile,
    schubert_basis_sizes,
    transpose_duality,
)
from minorbit.orbitposet import (
    build_level_diagram,
    crossing_block,
    differential_matrix,
    oracle_check_edges,
)
from minorbit.rootsys import build
from minorbit.typea import crosscheck_typea
from minorbit.weyl import WeylGroup
from minorbit.zlinalg import IntMatrix, determinantal_divisors, rank, snf

if TYPE_CHECKING:
    from minorbit.check import CheckSequence
    from minorbit.rootsys import RootSystem

# matrices larger than this are skipped by the minor-gcd oracle
MINOR_ORACLE_MAX_DIM = 5
MINOR_ORACLE_MAX_K = 3


@check
def golden_cohomology(rs: RootSystem) -> CheckOutcome:
    """Every degree agrees with the closed form or the bundled table."""
    got = minimal_orbit_cohomology(rs).as_dict()
    expected = expected_cohomology(rs.family, rs.rank)
    if got == expected:
        return CheckOutcome.ok()
    diff = sorted(n for n in set(got) | set(expected) if got.get(n) != expected.get(n))
    shown = ", ".join(f"H^{n}: {got.get(n, '0')} vs {expected.get(n, '0')}" for n in diff[:4])
    return CheckOutcome.fail(f"{len(diff)} degrees differ ({shown})")


@check(when=lambda rs: rs.family == "A" or rs.name in EXCEPTIONAL)
def golden_matrices(rs: RootSystem) -> CheckOutcome:
    """The computed D_i reproduce the printed matrices entry for entry."""
    diagram = build_level_diagram(rs)
    for i, expected in sorted(expected_matrices(rs.family, rs.rank).items()):
        got = differential_matrix(diagram, i).matrix
        if got != expected:
            return CheckOutcome.fail(f"D_{i}: got {got}, expected {expected}")
    return CheckOutcome.ok()


@check
def middle_identity(rs: RootSystem) -> CheckOutcome:
    """H^{2h^vee-2} is P^vee/Q^vee of the long simple subsystem."""
    computed = minimal_orbit_cohomology(rs)[middle_degree(rs)]
    fundamental = middle_group(rs)
    expected = expected_middle_group(rs.family, rs.rank)
    if computed == fundamental == expected:
        return CheckOutcome.ok()
    return CheckOutcome.fail(
        f"middle degree {middle_degree(rs)}: cohomology {computed}, "
        f"Cartan cokernel {fundamental}, expected {expected}"
    )


@check(when=lambda rs: rs.family == "A")
def typea_crosscheck(rs: RootSystem) -> bool:
    """The bundle over projective space gives the same answer."""
    return crosscheck_typea(rs.rank + 1)


@check
def weyl_oracle(rs: RootSystem, cap: int | None = None) -> bool:
    """Edges recomputed from Bruhat covers inside the parabolic quotient."""
    return oracle_check_edges(rs, cap)


@check
def line_bundle_identity(rs: RootSystem, cap: int | None = None) -> CheckOutcome:
    """The punctured bundle of the highest root over G/P_I~ has the minimal orbit's cohomology."""
    weight = CharacterWeight.from_root(rs, rs.highest_root)
    got = line_bundle_cohomology(rs, rs.i_tilde, weight, cap)
    expected = minimal_orbit_cohomology(rs)
    return CheckOutcome.expect_equal(
        "Chern-class cohomology over X_I~", got.as_dict(), expected.as_dict()
    )


@check
def length_formulas(rs: RootSystem) -> CheckOutcome:
    """l(s_beta) = 2 ht(beta^vee) - 1 for long positive beta, and l(x_alpha) = level(alpha)."""
    weyl = WeylGroup(rs)
    for beta in rs.positive_long_roots:
        got = weyl.length(weyl.reflection(beta))
        expected = 2 * rs.dual_height(beta) - 1
        if got != expected:
            return CheckOutcome.fail(f"l(s_{beta.label}) = {got}, expected {expected}")
    for alpha in rs.long_roots:
        got = weyl.length(weyl.x_alpha(alpha))
        if got != rs.level(alpha):
            return CheckOutcome.fail(f"l(x_{alpha.label}) = {got}, level {rs.level(alpha)}")
    return CheckOutcome.ok()


@check
def hard_lefschetz(rs: RootSystem) -> CheckOutcome:
    """Over Q, D_i is injective up to the middle and surjective from it on."""
    diagram = build_level_diagram(rs)
    middle = rs.h_dual - 1
    for i in range(1, diagram.depth):
        m = differential_matrix(diagram, i).matrix
        r = rank(m)
        if i <= middle and r != m.cols:
            return CheckOutcome.fail(f"D_{i} has rank {r}, not injective on {m.cols} columns")
        if i >= middle and r != m.rows:
            return CheckOutcome.fail(f"D_{i} has rank {r}, not surjective onto {m.rows} rows")
    return CheckOutcome.ok()


@check
def odd_vanishing(rs: RootSystem) -> CheckOutcome:
    """No cohomology in odd degrees below 2h^vee - 2."""
    cohomology = minimal_orbit_cohomology(rs)
    bad = [n for n in cohomology.degrees() if n % 2 and n <= 2 * rs.h_dual - 3]
    return CheckOutcome.fail(f"odd classes at {bad}") if bad else CheckOutcome.ok()


@check
def euler_zero(rs: RootSystem) -> CheckOutcome:
    return CheckOutcome.expect_equal(
        "Euler characteristic", euler_characteristic(minimal_orbit_cohomology(rs)), 0
    )


@check
def level_histogram(rs: RootSystem) -> CheckOutcome:
    """Level sizes form a palindrome with a single root at either end."""
    sizes = schubert_basis_sizes(rs)
    if len(sizes) != 2 * rs.h_dual - 2:
        return CheckOutcome.fail(f"{len(sizes)} levels, expected {2 * rs.h_dual - 2}")
    if sizes != sizes[::-1] or sizes[0] != 1:
        return CheckOutcome.fail(f"level sizes {list(sizes)}")
    if sum(sizes) != len(rs.long_roots):
        return CheckOutcome.fail(f"{sum(sizes)} roots placed, {len(rs.long_roots)} long roots")
    return CheckOutcome.ok()


@check
def level_connectivity(rs: RootSystem) -> CheckOutcome:
    """Roots off the top level have an incoming edge, roots off the bottom level an outgoing one."""
    diagram = build_level_diagram(rs)
    sources = {e.source.coeffs for e in diagram.edges}
    targets = {e.target.coeffs for e in diagram.edges}
    for i, level in enumerate(diagram.levels):
        for root in level:
            if i >= 1 and root.coeffs not in targets:
                return CheckOutcome.fail(f"{root.label} at level {i} has no incoming edge")
            if i <= diagram.depth - 2 and root.coeffs not in sources:
                return CheckOutcome.fail(f"{root.label} at level {i} has no outgoing edge")
    return CheckOutcome.ok()


@check
def edge_multiplicities(rs: RootSystem) -> CheckOutcome:
    """Non-crossing edges carry 1 or r; the crossing block is the unsigned long Cartan matrix."""
    diagram = build_level_diagram(rs)
    for e in diagram.edges:
        if e.is_crossing:
            continue
        expected = 1 if e.gamma.is_long else rs.r
        if e.multiplicity != expected:
            return CheckOutcome.fail(
                f"{e.source.label} -> {e.target.label} has multiplicity {e.multiplicity}"
            )
    block = crossing_block(diagram)
    sub = rs.long_simple_subsystem().datum.cartan_matrix
    expected_block = IntMatrix.from_rows([[abs(x) for x in row] for row in sub])
    return CheckOutcome.expect_equal("crossing block", block, expected_block)


@check
def smith_minor_oracle(rs: RootSystem) -> CheckOutcome:
    """Invariant factors agree with gcds of minors on the small D_i."""
    diagram = build_level_diagram(rs)
    for i in range(1, diagram.depth):
        m = differential_matrix(diagram, i).matrix
        if max(m.shape) > MINOR_ORACLE_MAX_DIM:
            continue
        form = snf(m)
        for k, g in enumerate(determinantal_divisors(m, k_max=MINOR_ORACLE_MAX_K), start=1):
            expected = math.prod(form.divisors[:k]) if k <= form.rank else 0
            if g != expected:
                return CheckOutcome.fail(f"D_{i}: gcd of {k}-minors {g}, SNF gives {expected}")
    return CheckOutcome.ok()


def standard_checks(config: EngineConfig = DEFAULT) -> CheckSequence:
    """The full verification sequence, with Weyl-side checks limited to small ranks."""

    def small(rs: RootSystem) -> bool:
        return rs.rank <= config.oracle_max_rank

    return (
        golden_cohomology
        >> golden_matrices
        >> middle_identity
        >> transpose_duality
        >> typea_crosscheck
        >> weyl_oracle.bind(cap=config.coset_cap).where(small)
        >> line_bundle_identity.bind(cap=config.coset_cap).where(small)
        >> length_formulas.where(small)
        >> hard_lefschetz
        >> odd_vanishing
        >> bad_prime_torsion
        >> rational_profile
        >> euler_zero
        >> level_histogram
        >> level_connectivity
        >> edge_multiplicities
        >> smith_minor_oracle
    )


def sweep(config: EngineConfig = DEFAULT) -> list[RootSystem]:
    """Every type visited by `all`: classical ranks up to the configured bounds, then E, F, G."""
    systems = [build("A", n, config) for n in range(1, config.sweep_max_rank_a + 1)]
    systems += [build("B", n, config) for n in range(2, config.sweep_max_rank + 1)]
    systems += [build("C", n, config) for n in range(2, config.sweep_max_rank + 1)]
    systems += [build("D", n, config) for n in range(3, config.sweep_max_rank + 1)]
    systems += [build(f, n, config) for f, n in (("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2))]
    return systems
