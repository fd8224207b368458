"""Internal type aliases used across the engine."""

from __future__ import annotations

from typing import TypeAlias

# Coefficients of a root (or weight) over the simple-root basis.
Coeffs: TypeAlias = tuple[int, ...]

# Dense integer matrix stored row by row.
Rows: TypeAlias = tuple[tuple[int, ...], ...]

# A Weyl group element acting on the index set of the root list.
Perm: TypeAlias = tuple[int, ...]
