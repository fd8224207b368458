"""Level diagram of the long roots and the differential matrices D_i.

Long roots are bucketed by level 0..2h^vee-3. An edge beta -> alpha joins
adjacent levels whenever alpha = s_gamma(beta) for a positive root gamma; its
multiplicity <beta, gamma^vee> is the Pieri coefficient of the first Chern
class of the line bundle on the corresponding Schubert classes.

Within a level, positive roots are listed in descending lexicographic order
and negative roots in the order of their opposites, so that D_{d-i} is the
transpose of D_i with d = 2h^vee - 2.
"""

from __future__ import annotations

import functools
import logging
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

from minorbit.rootsys import Root, level_order_key
from minorbit.weyl import WeylGroup
from minorbit.zlinalg import IntMatrix

if TYPE_CHECKING:
    from minorbit._types import Coeffs
    from minorbit.rootsys import RootSystem

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Edge:
    """A cover beta -> alpha = s_gamma(beta) one level down, with m = <beta, gamma^vee>."""

    source: Root
    target: Root
    gamma: Root
    multiplicity: int

    @property
    def is_crossing(self) -> bool:
        """True for edges from a positive root to a negative one."""
        return self.source.is_positive and not self.target.is_positive


@dataclass(frozen=True)
class LevelDiagram:
    """Long roots by level plus the multiplicity-labelled edges between adjacent levels."""

    rs: RootSystem
    levels: tuple[tuple[Root, ...], ...]
    edges: tuple[Edge, ...]

    @property
    def depth(self) -> int:
        """d = 2h^vee - 2, the number of levels."""
        return len(self.levels)

    def level_sizes(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.levels)

    def multiplicity(self, source: Root, target: Root) -> int:
        return self._edge_table.get((source.coeffs, target.coeffs), 0)

    @functools.cached_property
    def _edge_table(self) -> dict[tuple[Coeffs, Coeffs], int]:
        return {(e.source.coeffs, e.target.coeffs): e.multiplicity for e in self.edges}

    def outgoing(self, source: Root) -> list[Edge]:
        return [e for e in self.edges if e.source == source]

    def incoming(self, target: Root) -> list[Edge]:
        return [e for e in self.edges if e.target == target]


@dataclass(frozen=True)
class DiffMatrix:
    """D_i: rows indexed by level i, columns by level i-1.

    Attributes:
        level_index: i.
        matrix: Entry (a, b) is the multiplicity of the edge cols[b] -> rows[a], else 0.
        row_roots: Roots of level i.
        col_roots: Roots of level i-1.
    """

    level_index: int
    matrix: IntMatrix
    row_roots: tuple[Root, ...]
    col_roots: tuple[Root, ...]


@functools.lru_cache(maxsize=32)
def build_level_diagram(rs: RootSystem) -> LevelDiagram:
    """Bucket the long roots by level and connect adjacent levels by reflections."""
    buckets: list[list[Root]] = [[] for _ in range(rs.max_level + 1)]
    for root in rs.long_roots:
        buckets[rs.level(root)].append(root)
    levels = tuple(tuple(sorted(b, key=level_order_key)) for b in buckets)

    edges: list[Edge] = []
    for upper, lower in zip(levels, levels[1:]):
        for beta in upper:
            for alpha in lower:
                edge = _find_edge(rs, beta, alpha)
                if edge is not None:
                    edges.append(edge)
    logger.debug("%s: %d long roots, %d edges", rs.name, len(rs.long_roots), len(edges))
    return LevelDiagram(rs, levels, tuple(edges))


def _find_edge(rs: RootSystem, beta: Root, alpha: Root) -> Edge | None:
    diff = [b - a for b, a in zip(beta.coeffs, alpha.coeffs, strict=True)]
    g = math.gcd(*diff)
    direction = tuple(x // g for x in diff)
    gamma = rs.get(direction)
    if gamma is None:
        return None
    if not gamma.is_positive:
        gamma = -gamma
    if rs.reflect(gamma, beta) != alpha:
        return None
    m = rs.pairing(beta, gamma)
    return Edge(beta, alpha, gamma, m) if m >= 1 else None


def differential_matrix(d: LevelDiagram, i: int) -> DiffMatrix:
    """D_i for 0 <= i <= depth; missing levels contribute zero rows or columns."""
    if not 0 <= i <= d.depth:
        raise ValueError(f"level index {i} outside 0..{d.depth}")
    rows = d.levels[i] if i < d.depth else ()
    cols = d.levels[i - 1] if i >= 1 else ()
    entries = [[d.multiplicity(beta, alpha) for beta in cols] for alpha in rows]
    return DiffMatrix(i, IntMatrix.from_rows(entries, cols=len(cols)), rows, cols)


def differential_matrices(d: LevelDiagram) -> list[DiffMatrix]:
    """D_1 .. D_{depth-1}, the matrices between existing levels."""
    return [differential_matrix(d, i) for i in range(1, d.depth)]


def crossing_block(d: LevelDiagram) -> IntMatrix:
    """The block from the long simple roots to their negatives (D_{h^vee - 1})."""
    return differential_matrix(d, d.rs.h_dual - 1).matrix


def oracle_check_edges(rs: RootSystem, cap: int | None = None) -> bool:
    """Recompute the edges from covers x_beta -> s_gamma x_beta inside X_I~ and compare.

    Raises:
        CapExceededError: If X_I~ does not fit under `cap`.
    """
    weyl = WeylGroup(rs)
    family = weyl.coset_reps(rs.i_tilde, cap)
    top = rs.index(rs.highest_root)
    reflections = {weyl.reflection(rs.roots[k]).perm: rs.roots[k] for k in rs.positive_roots}

    found: set[tuple[tuple[int, ...], tuple[int, ...], int]] = set()
    buckets = family.by_length()
    for length, lower in buckets.items():
        for x_alpha in buckets.get(length + 1, []):
            alpha = rs.roots[x_alpha.perm[top]]
            for x_beta in lower:
                u = weyl.compose(x_alpha, weyl.inverse(x_beta))
                gamma = reflections.get(u.perm)
                if gamma is None:
                    continue
                beta = rs.roots[x_beta.perm[top]]
                found.add((beta.coeffs, alpha.coeffs, rs.pairing(beta, gamma)))

    diagram = build_level_diagram(rs)
    expected = {(e.source.coeffs, e.target.coeffs, e.multiplicity) for e in diagram.edges}
    if len(family) != len(rs.long_roots) or found != expected:
        logger.warning(
            "%s: edge oracle mismatch (%d cosets, %d vs %d edges)",
            rs.name, len(family), len(found), len(expected),
        )
        return False
    return True


def export_dot(d: LevelDiagram) -> str:
    """Graphviz text with one rank row per level; multiplicities above 1 label the edges."""
    lines = [f'digraph "{d.rs.name}" {{', "  rankdir=TB;", "  node [shape=plaintext];"]
    for level in d.levels:
        nodes = " ".join(f'"{root.label}";' for root in level)
        lines.append(f"  {{ rank=same; {nodes} }}")
    for e in d.edges:
        attrs = f' [label="{e.multiplicity}"]' if e.multiplicity > 1 else ""
        lines.append(f'  "{e.source.label}" -> "{e.target.label}"{attrs};')
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_text(d: LevelDiagram) -> str:
    """Plain-text diagram: one line per level, then the edges with multiplicity above 1."""
    width = len(str(d.depth - 1))
    lines = [f"{d.rs.name}: {len(d.rs.long_roots)} long roots, h^vee = {d.rs.h_dual}"]
    for i, level in enumerate(d.levels):
        lines.append(f"  L{i:<{width}} | " + "  ".join(root.label for root in level))
    heavy = [e for e in d.edges if e.multiplicity > 1]
    if heavy:
        lines.append("  multiple edges:")
        lines.extend(
            f"    {e.source.label} -> {e.target.label} (x{e.multiplicity})" for e in heavy
        )
    return "\n".join(lines) + "\n"
