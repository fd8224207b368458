from __future__ import annotations

import pytest

from minorbit import IntMatrix, RootSystem, build, build_level_diagram, differential_matrix
from minorbit.fixtures import expected_matrices
from minorbit.orbitposet import (
    crossing_block,
    differential_matrices,
    export_dot,
    oracle_check_edges,
    render_text,
)


def _mat(rows: list[list[int]]) -> IntMatrix:
    return IntMatrix.from_rows(rows)


def test_a2_diagram(a2: RootSystem) -> None:
    d = build_level_diagram(a2)
    assert d.depth == 4
    assert d.level_sizes() == (1, 2, 2, 1)
    assert [r.label for r in d.levels[1]] == ["10", "01"]
    assert [r.label for r in d.levels[2]] == ["-10", "-01"]
    assert differential_matrix(d, 1).matrix == _mat([[1], [1]])
    assert differential_matrix(d, 2).matrix == _mat([[2, 1], [1, 2]])
    assert differential_matrix(d, 3).matrix == _mat([[1, 1]])


def test_g2_matrices(g2: RootSystem) -> None:
    d = build_level_diagram(g2)
    entries = [dm.matrix.to_lists() for dm in differential_matrices(d)]
    assert entries == [[[1]], [[3]], [[2]], [[3]], [[1]]]
    assert d.multiplicity(g2.roots[4], g2.roots[1]) == 3
    assert d.multiplicity(g2.roots[1], g2.roots[4]) == 0


def test_boundary_matrices(g2: RootSystem) -> None:
    d = build_level_diagram(g2)
    assert differential_matrix(d, 0).matrix.shape == (1, 0)
    assert differential_matrix(d, d.depth).matrix.shape == (0, 1)
    with pytest.raises(ValueError):
        differential_matrix(d, -1)
    with pytest.raises(ValueError):
        differential_matrix(d, d.depth + 1)


def test_f4_matches_printed_matrices(f4: RootSystem) -> None:
    d = build_level_diagram(f4)
    for i, expected in expected_matrices("F", 4).items():
        assert differential_matrix(d, i).matrix == expected, f"D_{i}"


def test_transpose_symmetry(e6: RootSystem) -> None:
    d = build_level_diagram(e6)
    for i in range(d.depth + 1):
        assert differential_matrix(d, d.depth - i).matrix == differential_matrix(d, i).matrix.T


def test_edges(g2: RootSystem) -> None:
    d = build_level_diagram(g2)
    crossing = [e for e in d.edges if e.is_crossing]
    assert len(crossing) == 1
    edge = crossing[0]
    assert edge.source == g2.simple_root(0)
    assert edge.target == -g2.simple_root(0)
    assert edge.multiplicity == 2
    assert len(d.outgoing(g2.highest_root)) == 1
    assert d.incoming(g2.highest_root) == []


def test_crossing_block_is_unsigned_cartan() -> None:
    d = build_level_diagram(build("D", 4))
    assert crossing_block(d) == _mat(
        [[2, 1, 0, 0], [1, 2, 1, 1], [0, 1, 2, 0], [0, 1, 0, 2]]
    )


@pytest.mark.parametrize(("family", "rank"), [("A", 3), ("B", 3), ("C", 3), ("G", 2), ("D", 4)])
def test_oracle_agrees(family: str, rank: int) -> None:
    assert oracle_check_edges(build(family, rank))


def test_export_dot(g2: RootSystem) -> None:
    dot = export_dot(build_level_diagram(g2))
    assert dot.startswith('digraph "G2" {')
    assert '"13" -> "10" [label="3"];' in dot
    assert '"23" -> "13";' in dot
    assert dot.count("rank=same") == 6


def test_render_text(g2: RootSystem) -> None:
    text = render_text(build_level_diagram(g2))
    assert text.splitlines()[0] == "G2: 6 long roots, h^vee = 4"
    assert "  L0 | 23" in text
    assert "13 -> 10 (x3)" in text


CONNECTED_TYPES = (
    [("A", n) for n in range(1, 8)]
    + [(f, n) for f in "BC" for n in range(2, 8)]
    + [("D", n) for n in range(3, 8)]
    + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
)


@pytest.mark.parametrize(("family", "rank"), CONNECTED_TYPES)
def test_every_root_is_connected(family: str, rank: int) -> None:
    d = build_level_diagram(build(family, rank))
    entered = {e.target for e in d.edges}
    left = {e.source for e in d.edges}
    for i, level in enumerate(d.levels):
        for root in level:
            if i >= 1:
                assert root in entered, f"{root.label} at level {i}"
            if i <= d.depth - 2:
                assert root in left, f"{root.label} at level {i}"
    assert all(d.rs.level(e.source) + 1 == d.rs.level(e.target) for e in d.edges)
