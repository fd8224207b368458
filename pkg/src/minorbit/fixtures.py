"""Reference values: closed forms for the classical types, bundled tables for the rest.

The exceptional tables and printed matrices live in `data/golden.json` so a
transcription slip shows up as a data diff, not a code change.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass
from importlib import resources
from typing import Any

import sympy

from minorbit.dynkin import cartan_datum
from minorbit.errors import FixtureError
from minorbit.zlinalg import FGAbelianGroup, IntMatrix

GOLDEN_RESOURCE = "data/golden.json"
EXCEPTIONAL = ("E6", "E7", "E8", "F4", "G2")


@dataclass(frozen=True)
class GoldenData:
    """Parsed contents of the bundled golden file."""

    cohomology: dict[str, dict[int, FGAbelianGroup]]
    matrices: dict[str, dict[int, IntMatrix]]


def parse_golden(raw: dict[str, Any], source: str = GOLDEN_RESOURCE) -> GoldenData:
    """Validate and convert the JSON structure.

    Raises:
        FixtureError: On missing keys, non-integer data or ragged matrices.
    """
    try:
        cohomology = {
            name: _table(entry) for name, entry in raw["cohomology"].items()
        }
        matrices = {
            name: {
                int(i): IntMatrix.from_rows(rows, cols=len(rows[0]) if rows else 0)
                for i, rows in entry.items()
            }
            for name, entry in raw["matrices"].items()
        }
    except (KeyError, TypeError, ValueError) as e:
        raise FixtureError(source, str(e)) from e
    return GoldenData(cohomology, matrices)


def _table(entry: dict[str, Any]) -> dict[int, FGAbelianGroup]:
    free: dict[int, int] = {}
    cyclic: dict[int, list[int]] = {}
    for n in entry["free"]:
        free[int(n)] = free.get(int(n), 0) + 1
    for order, degrees in entry.get("cyclic", {}).items():
        for n in degrees:
            cyclic.setdefault(int(n), []).append(int(order))
    out: dict[int, FGAbelianGroup] = {}
    for n in sorted(set(free) | set(cyclic)):
        out[n] = FGAbelianGroup.from_primary(free.get(n, 0), _prime_powers(cyclic.get(n, [])))
    return out


@functools.lru_cache(maxsize=1)
def load_golden() -> GoldenData:
    """Read the bundled golden data once."""
    try:
        text = resources.files("minorbit").joinpath(GOLDEN_RESOURCE).read_text("utf-8")
        raw = json.loads(text)
    except (OSError, json.JSONDecodeError) as e:
        raise FixtureError(GOLDEN_RESOURCE, str(e)) from e
    return parse_golden(raw)


# --- closed forms ---


def _groups(free: list[int], torsion: dict[int, list[int]]) -> dict[int, FGAbelianGroup]:
    out: dict[int, FGAbelianGroup] = {}
    for n in sorted(set(free) | set(torsion)):
        out[n] = FGAbelianGroup.from_primary(free.count(n), _prime_powers(torsion.get(n, [])))
    return out


def _cohomology_a(rank: int) -> dict[int, FGAbelianGroup]:
    n = rank + 1
    free = list(range(0, 2 * n - 3, 2)) + list(range(2 * n - 1, 4 * n - 4, 2))
    return _groups(free, {2 * n - 2: [n]})


def _cohomology_b(n: int) -> dict[int, FGAbelianGroup]:
    free = list(range(0, 4 * n - 7, 4)) + list(range(4 * n - 1, 8 * n - 8, 4))
    torsion = {i: [2] for i in range(2 * n - 2, 6 * n - 5) if i % 4 == 2}
    torsion.setdefault(4 * n - 4, []).append(n)
    return _groups(free, torsion)


def _cohomology_c(n: int) -> dict[int, FGAbelianGroup]:
    return _groups([0, 4 * n - 1], {i: [2] for i in range(2, 4 * n - 1, 2)})


def _cohomology_d(n: int) -> dict[int, FGAbelianGroup]:
    free = list(range(0, 4 * n - 7, 4)) + list(range(4 * n - 5, 8 * n - 12, 4))
    # the extra classes sit at 2n-4 and its mirror image 8n-13-(2n-4) = 6n-9
    free += [2 * n - 4, 6 * n - 9]
    middle = 4 * n - 6
    torsion = {
        i: [2]
        for i in range(2 * n - 3, 6 * n - 8)
        if i % 4 == 2 and i != middle
    }
    torsion[middle] = [2, 2] if n % 2 == 0 else [4]
    return _groups(free, torsion)


def _prime_powers(orders: list[int]) -> list[int]:
    """Prime-power factors of a list of cyclic orders."""
    return [int(p) ** int(e) for d in orders for p, e in sympy.factorint(d).items()]


def expected_cohomology(family: str, rank: int) -> dict[int, FGAbelianGroup]:
    """Nonzero groups of H^*(O_min, Z) from closed forms or bundled tables."""
    family = family.upper()
    if family == "A":
        return _cohomology_a(rank)
    if family == "B":
        return _cohomology_b(rank)
    if family == "C":
        return _cohomology_c(rank)
    if family == "D":
        return _cohomology_d(rank)
    name = f"{family}{rank}"
    table = load_golden().cohomology.get(name)
    if table is None:
        raise FixtureError(GOLDEN_RESOURCE, f"no cohomology table for {name}")
    return table


def expected_middle_group(family: str, rank: int) -> FGAbelianGroup:
    """P^vee/Q^vee of the long simple subsystem, by type."""
    family = family.upper()
    if family == "A":
        return FGAbelianGroup.cyclic(rank + 1)
    if family == "B":
        return FGAbelianGroup.cyclic(rank)
    if family == "C":
        return FGAbelianGroup.cyclic(2)
    if family == "D":
        return FGAbelianGroup(torsion=(2, 2)) if rank % 2 == 0 else FGAbelianGroup.cyclic(4)
    return {
        "E6": FGAbelianGroup.cyclic(3),
        "E7": FGAbelianGroup.cyclic(2),
        "E8": FGAbelianGroup(),
        "F4": FGAbelianGroup.cyclic(3),
        "G2": FGAbelianGroup.cyclic(2),
    }[f"{family}{rank}"]


def n_matrix(k: int) -> IntMatrix:
    """N(k): the (k+1) x k matrix with ones on the diagonal and the subdiagonal."""
    return IntMatrix.from_rows(
        [[int(i == j or i == j + 1) for j in range(k)] for i in range(k + 1)], cols=k
    )


def unsigned_cartan(family: str, rank: int) -> IntMatrix:
    """The Cartan matrix of the given type without minus signs."""
    return IntMatrix.from_rows(
        [[abs(x) for x in row] for row in cartan_datum(family, rank).cartan_matrix]
    )


def expected_matrices(family: str, rank: int) -> dict[int, IntMatrix]:
    """Printed D_i: N(i) and the middle block for type A, the bundled lists otherwise."""
    family = family.upper()
    if family == "A":
        n = rank + 1
        out = {i: n_matrix(i) for i in range(1, n - 1)}
        out[n - 1] = unsigned_cartan("A", n - 1)
        return out
    name = f"{family}{rank}"
    if name not in EXCEPTIONAL:
        return {}
    return dict(load_golden().matrices[name])
