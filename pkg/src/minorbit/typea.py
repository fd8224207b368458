"""Type A through the resolution by the total space of a bundle on P^{n-1}.

The minimal orbit of sl_n is the set of rank-1 trace-0 matrices. It fibres
over P^{n-1} with fibre the nonzero vectors of a rank n-1 bundle F whose
total Chern class is (1+y)^n in Z[y]/(y^n), y the first Chern class of O(-1).
Its Euler class c = n y^{n-1} drives the Gysin sequence.
"""

from __future__ import annotations

from dataclasses import dataclass

from minorbit.gysin import GradedCohomology, minimal_orbit_cohomology
from minorbit.rootsys import build
from minorbit.zlinalg import FGAbelianGroup, IntMatrix, cokernel, kernel_rank


@dataclass(frozen=True)
class TruncatedPolynomial:
    """An element c_0 + c_1 y + ... + c_{n-1} y^{n-1} of Z[y]/(y^n)."""

    modulus_degree: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.modulus_degree < 1:
            raise ValueError(f"modulus degree must be positive, got {self.modulus_degree}")
        if len(self.coeffs) != self.modulus_degree:
            raise ValueError(
                f"expected {self.modulus_degree} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def from_coeffs(cls, n: int, coeffs: list[int] | tuple[int, ...]) -> TruncatedPolynomial:
        """Truncate or pad `coeffs` to length n."""
        padded = list(coeffs[:n]) + [0] * max(0, n - len(coeffs))
        return cls(n, tuple(padded))

    @classmethod
    def one(cls, n: int) -> TruncatedPolynomial:
        return cls.from_coeffs(n, [1])

    @classmethod
    def y(cls, n: int) -> TruncatedPolynomial:
        return cls.from_coeffs(n, [0, 1])

    def _check_ring(self, other: TruncatedPolynomial) -> None:
        if other.modulus_degree != self.modulus_degree:
            raise ValueError("polynomials live in different truncated rings")

    def __add__(self, other: TruncatedPolynomial) -> TruncatedPolynomial:
        self._check_ring(other)
        return TruncatedPolynomial(
            self.modulus_degree,
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs, strict=True)),
        )

    def __mul__(self, other: TruncatedPolynomial) -> TruncatedPolynomial:
        self._check_ring(other)
        n = self.modulus_degree
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(n - i):
                    out[i + j] += a * other.coeffs[j]
        return TruncatedPolynomial(n, tuple(out))

    def __pow__(self, k: int) -> TruncatedPolynomial:
        if k < 0:
            raise ValueError("negative powers are not defined")
        result = TruncatedPolynomial.one(self.modulus_degree)
        for _ in range(k):
            result = result * self
        return result

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < self.modulus_degree else 0

    def multiplication_matrix(self, src_power: int, dst_power: int) -> IntMatrix:
        """Matrix of multiplication by self from Z y^src_power to Z y^dst_power.

        Powers outside 0..n-1 stand for the zero group and give empty shapes.
        """
        n = self.modulus_degree
        rows = 1 if 0 <= dst_power < n else 0
        cols = 1 if 0 <= src_power < n else 0
        entries = [[self.coefficient(dst_power - src_power)] * cols for _ in range(rows)]
        return IntMatrix.from_rows(entries, cols=cols)

    def __str__(self) -> str:
        terms = [
            ("" if c == 1 and i else str(c)) + ("" if i == 0 else "y" if i == 1 else f"y^{i}")
            for i, c in enumerate(self.coeffs)
            if c
        ]
        return " + ".join(terms) or "0"


def total_chern_kernel_bundle(n: int) -> TruncatedPolynomial:
    """(1+y)^n in Z[y]/(y^n)."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    return (TruncatedPolynomial.one(n) + TruncatedPolynomial.y(n)) ** n


def _power(degree: int) -> int:
    # cohomological degree of P^{n-1} to a power of y; odd degrees map outside the range
    return degree // 2 if degree % 2 == 0 and degree >= 0 else -1


def typea_cohomology(n: int) -> GradedCohomology:
    """H^*(O_min(sl_n), Z) from the Gysin sequence over P^{n-1}."""
    chern = total_chern_kernel_bundle(n)
    euler = TruncatedPolynomial.from_coeffs(n, [0] * (n - 1) + [chern.coefficient(n - 1)])
    shift = 2 * n - 2
    top = 4 * n - 5

    groups: dict[int, FGAbelianGroup] = {}
    for i in range(top + 1):
        into = euler.multiplication_matrix(_power(i - shift), _power(i))
        out_of = euler.multiplication_matrix(_power(i - shift + 1), _power(i + 1))
        coker = cokernel(into)
        groups[i] = FGAbelianGroup(coker.free_rank + kernel_rank(out_of), coker.torsion)
    return GradedCohomology.from_mapping("A", n - 1, n, top, groups)


def crosscheck_typea(n: int) -> bool:
    """Whether the resolution computation agrees with the root-combinatorial one."""
    return typea_cohomology(n) == minimal_orbit_cohomology(build("A", n - 1))
