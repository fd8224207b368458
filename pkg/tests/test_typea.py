from __future__ import annotations

import math

import pytest

from minorbit import FGAbelianGroup, typea_cohomology
from minorbit.typea import TruncatedPolynomial, crosscheck_typea, total_chern_kernel_bundle


def test_truncated_arithmetic() -> None:
    y = TruncatedPolynomial.y(3)
    one = TruncatedPolynomial.one(3)
    assert (one + y) ** 2 == TruncatedPolynomial(3, (1, 2, 1))
    assert y**3 == TruncatedPolynomial(3, (0, 0, 0))
    assert str(total_chern_kernel_bundle(3)) == "1 + 3y + 3y^2"
    assert str(TruncatedPolynomial(2, (0, 0))) == "0"


def test_truncated_validation() -> None:
    with pytest.raises(ValueError):
        TruncatedPolynomial(2, (1, 2, 3))
    with pytest.raises(ValueError):
        TruncatedPolynomial.y(3) + TruncatedPolynomial.y(4)
    with pytest.raises(ValueError):
        total_chern_kernel_bundle(1)
    with pytest.raises(ValueError):
        TruncatedPolynomial.y(3) ** -1


@pytest.mark.parametrize("n", [2, 3, 5, 8])
def test_chern_class_is_truncated_binomial(n: int) -> None:
    # y^n vanishes, so the last binomial coefficient is dropped
    chern = total_chern_kernel_bundle(n)
    assert chern.coeffs == tuple(math.comb(n, i) for i in range(n))
    assert chern.coefficient(n - 1) == n


def test_multiplication_matrix() -> None:
    c = TruncatedPolynomial.from_coeffs(3, [0, 0, 3])
    assert c.multiplication_matrix(0, 2).to_lists() == [[3]]
    assert c.multiplication_matrix(1, 3).shape == (0, 1)
    assert c.multiplication_matrix(-1, 1).shape == (1, 0)


def test_sl3_table() -> None:
    cohomology = typea_cohomology(3)
    z = FGAbelianGroup.free(1)
    assert cohomology.as_dict() == {0: z, 2: z, 4: FGAbelianGroup.cyclic(3), 5: z, 7: z}
    assert cohomology.name == "A2"


@pytest.mark.parametrize("n", range(2, 13))
def test_agrees_with_root_combinatorics(n: int) -> None:
    assert crosscheck_typea(n)
