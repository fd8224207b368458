from __future__ import annotations

import pytest

from minorbit import FGAbelianGroup, FixtureError
from minorbit.fixtures import (
    expected_cohomology,
    expected_matrices,
    expected_middle_group,
    load_golden,
    n_matrix,
    parse_golden,
    unsigned_cartan,
)


def test_type_a_closed_form() -> None:
    table = expected_cohomology("A", 3)
    assert table[6] == FGAbelianGroup(torsion=(4,))
    assert sorted(table) == [0, 2, 4, 6, 7, 9, 11]


def test_low_rank_coincidences() -> None:
    assert expected_cohomology("B", 2) == expected_cohomology("C", 2)
    assert expected_cohomology("D", 3) == expected_cohomology("A", 3)


def test_d_middle_depends_on_parity() -> None:
    assert expected_cohomology("D", 4)[10] == FGAbelianGroup(torsion=(2, 2))
    assert expected_cohomology("D", 5)[14] == FGAbelianGroup(torsion=(4,))
    assert expected_middle_group("D", 6) == FGAbelianGroup(torsion=(2, 2))


def test_exceptional_tables() -> None:
    e8 = expected_cohomology("E", 8)
    assert e8[48] == FGAbelianGroup.cyclic(5)
    assert e8[68] == FGAbelianGroup.cyclic(5)
    assert max(e8) == 115
    f4 = expected_cohomology("F", 4)
    assert f4[12] == FGAbelianGroup.cyclic(4)
    assert expected_middle_group("E", 7) == FGAbelianGroup.cyclic(2)


def test_matrix_helpers() -> None:
    assert n_matrix(2).to_lists() == [[1, 0], [1, 1], [0, 1]]
    assert unsigned_cartan("A", 3).to_lists() == [[2, 1, 0], [1, 2, 1], [0, 1, 2]]


def test_expected_matrices() -> None:
    a = expected_matrices("A", 4)
    assert sorted(a) == [1, 2, 3, 4]
    assert a[3] == n_matrix(3)
    assert a[4] == unsigned_cartan("A", 4)
    assert expected_matrices("F", 4)[5].to_lists() == [[1, 2], [0, 1]]
    assert len(expected_matrices("E", 8)) == 28
    assert expected_matrices("B", 4) == {}


def test_golden_file_is_loaded_once() -> None:
    assert load_golden() is load_golden()
    assert set(load_golden().cohomology) == {"E6", "E7", "E8", "F4", "G2"}


def test_malformed_golden_data() -> None:
    with pytest.raises(FixtureError) as exc:
        parse_golden({"cohomology": {}}, source="broken.json")
    assert exc.value.source == "broken.json"
    with pytest.raises(FixtureError):
        parse_golden({"cohomology": {"G2": {"free": ["x"]}}, "matrices": {}})
