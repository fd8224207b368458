"""Weyl groups acting by permutations of the root list.

W is never enumerated in full. Parabolic quotients X_I are generated coset by
coset, breadth first, and elements of X_I~ are also reachable directly from a
long root through `x_alpha`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from minorbit.config import DEFAULT
from minorbit.errors import CapExceededError, ShortRootError

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator

    from minorbit._types import Perm
    from minorbit.rootsys import Root, RootSystem

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element as a permutation of root indices.

    Attributes:
        perm: perm[k] is the index of w(roots[k]).
        length: |N(w)|, the number of positive roots sent to negative roots.
    """

    perm: Perm
    length: int = field(compare=False)

    def __call__(self, k: int) -> int:
        return self.perm[k]


@dataclass(frozen=True)
class CosetFamily:
    """Minimal-length representatives X_I of W / W_I, in breadth-first order.

    Attributes:
        index_set: The parabolic index set I.
        reps: One element per coset; BFS order, so lengths are non-decreasing.
    """

    index_set: frozenset[int]
    reps: tuple[WeylElement, ...]

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(w.length for w in self.reps)

    def by_length(self) -> dict[int, list[WeylElement]]:
        buckets: dict[int, list[WeylElement]] = {}
        for w in self.reps:
            buckets.setdefault(w.length, []).append(w)
        return buckets

    def __len__(self) -> int:
        return len(self.reps)

    def __iter__(self) -> Iterator[WeylElement]:
        return iter(self.reps)


class WeylGroup:
    """The Weyl group of a root system, realised on the index set of `rs.roots`."""

    def __init__(self, rs: RootSystem) -> None:
        self.rs = rs
        self._negative = tuple(not root.is_positive for root in rs.roots)
        self._neg_index = tuple(rs.index(-root) for root in rs.roots)
        self._simple = tuple(self._reflection_perm(rs.simple_root(i)) for i in range(rs.rank))
        self.identity = WeylElement(tuple(range(len(rs.roots))), 0)

    def _reflection_perm(self, gamma: Root) -> Perm:
        rs = self.rs
        return tuple(rs.index(rs.reflect(gamma, beta)) for beta in rs.roots)

    def _element(self, perm: Perm) -> WeylElement:
        return WeylElement(perm, self._length_of(perm))

    def _length_of(self, perm: Perm) -> int:
        neg = self._negative
        return sum(1 for k in self.rs.positive_roots if neg[perm[k]])

    # --- group structure ---

    def simple_reflection(self, i: int) -> WeylElement:
        return WeylElement(self._simple[i], 1)

    def reflection(self, gamma: Root) -> WeylElement:
        """s_gamma as a group element."""
        return self._element(self._reflection_perm(gamma))

    def compose(self, w: WeylElement, v: WeylElement) -> WeylElement:
        """w o v: first v, then w."""
        return self._element(tuple(w.perm[k] for k in v.perm))

    def inverse(self, w: WeylElement) -> WeylElement:
        inv = [0] * len(w.perm)
        for k, image in enumerate(w.perm):
            inv[image] = k
        return WeylElement(tuple(inv), w.length)

    def apply(self, w: WeylElement, alpha: Root) -> Root:
        return self.rs.roots[w.perm[self.rs.index(alpha)]]

    def length(self, w: WeylElement) -> int:
        """|N(w)| recomputed from the permutation."""
        return self._length_of(w.perm)

    def inversion_set(self, w: WeylElement) -> frozenset[int]:
        """N(w) as indices of positive roots."""
        return frozenset(k for k in self.rs.positive_roots if self._negative[w.perm[k]])

    def from_word(self, word: Iterable[int]) -> WeylElement:
        """s_{i_1} s_{i_2} ... s_{i_k} for the word (i_1, ..., i_k)."""
        w = self.identity
        for i in reversed(list(word)):
            w = self.compose(self.simple_reflection(i), w)
        return w

    def longest_element(self) -> WeylElement:
        """w_0, reached by left-multiplying with simple reflections while the length grows."""
        w = self.identity
        while True:
            for i in range(self.rs.rank):
                candidate = self.compose(self.simple_reflection(i), w)
                if candidate.length > w.length:
                    w = candidate
                    break
            else:
                return w

    # --- parabolic quotients ---

    def coset_reps(self, index_set: Iterable[int], cap: int | None = None) -> CosetFamily:
        """Enumerate X_I breadth first, one minimal element per coset wW_I.

        Cosets are keyed by w(xi_I) where xi_I pairs to 1 with every simple root outside I
        and to 0 with those in I; the key records <alpha_j, w(xi_I)> for every simple j.

        Raises:
            CapExceededError: If |X_I| would exceed `cap` (default `DEFAULT.coset_cap`).
        """
        index = frozenset(index_set)
        limit = DEFAULT.coset_cap if cap is None else cap
        outside = [i for i in range(self.rs.rank) if i not in index]
        simple_idx = [self.rs.index(self.rs.simple_root(j)) for j in range(self.rs.rank)]
        roots = self.rs.roots

        def key(w: WeylElement) -> tuple[int, ...]:
            inv = self.inverse(w).perm
            return tuple(sum(roots[inv[k]].coeffs[i] for i in outside) for k in simple_idx)

        seen = {key(self.identity)}
        reps = [self.identity]
        frontier = [self.identity]
        while frontier:
            nxt: list[WeylElement] = []
            for w in frontier:
                for i in range(self.rs.rank):
                    candidate = self.compose(self.simple_reflection(i), w)
                    if candidate.length <= w.length:
                        continue
                    k = key(candidate)
                    if k in seen:
                        continue
                    if len(reps) >= limit:
                        raise CapExceededError(limit, len(reps))
                    seen.add(k)
                    reps.append(candidate)
                    nxt.append(candidate)
            frontier = nxt
        logger.debug("X_I for I=%s in %s: %d cosets", sorted(index), self.rs.name, len(reps))
        return CosetFamily(index, tuple(reps))

    # --- long roots and X_I~ ---

    def simple_path(self, beta: Root, alpha: Root) -> list[int]:
        """Simple roots gamma_1, ..., gamma_k with alpha = s_gamma_k ... s_gamma_1(beta).

        Each step reflects the current root by a simple root it pairs positively with, so
        the path descends one level at a time.

        Raises:
            ValueError: If alpha is not reachable from beta by such a path.
        """
        rs = self.rs
        path: list[int] = []
        current = beta
        if not _reachable(rs, current, alpha):
            raise ValueError(f"no simple path from {beta.label} to {alpha.label}")
        while current != alpha:
            for i in range(rs.rank):
                gamma = rs.simple_root(i)
                if rs.pairing(current, gamma) <= 0:
                    continue
                candidate = rs.reflect(gamma, current)
                if _reachable(rs, candidate, alpha):
                    path.append(i)
                    current = candidate
                    break
            else:  # pragma: no cover - excluded by the reachability test above
                raise ValueError(f"simple path from {beta.label} to {alpha.label} is stuck")
        return path

    def x_alpha(self, alpha: Root) -> WeylElement:
        """The element x of X_I~ with x(highest_root) = alpha.

        Raises:
            ShortRootError: If alpha is short.
        """
        if not alpha.is_long:
            raise ShortRootError(alpha.coeffs)
        path = self.simple_path(self.rs.highest_root, alpha)
        return self.from_word(reversed(path))


def _reachable(rs: RootSystem, beta: Root, alpha: Root) -> bool:
    """Whether a simple path leads from the long root beta down to the long root alpha."""
    if beta == alpha:
        return True
    if beta.is_positive == alpha.is_positive:
        return alpha <= beta
    if not beta.is_positive:
        return False
    return any(
        beta.coeffs[i] and alpha.coeffs[i] for i in rs.simple_long_indices
    )
