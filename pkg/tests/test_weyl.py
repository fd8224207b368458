from __future__ import annotations

import itertools
import random
from typing import TYPE_CHECKING

import pytest

from minorbit import CapExceededError, RootSystem, ShortRootError, WeylGroup, build

if TYPE_CHECKING:
    from collections.abc import Iterable

    from minorbit import Root
    from minorbit.weyl import WeylElement


@pytest.mark.parametrize(("family", "rank"), [("A", 2), ("B", 3), ("G", 2), ("D", 4)])
def test_longest_element_inverts_every_positive_root(family: str, rank: int) -> None:
    rs = build(family, rank)
    weyl = WeylGroup(rs)
    w0 = weyl.longest_element()
    assert w0.length == len(rs.positive_roots)
    assert weyl.inversion_set(w0) == frozenset(rs.positive_roots)


def test_group_operations(a2: RootSystem) -> None:
    weyl = WeylGroup(a2)
    s0, s1 = weyl.simple_reflection(0), weyl.simple_reflection(1)
    assert weyl.compose(s0, s0) == weyl.identity
    w = weyl.from_word([0, 1])
    assert w == weyl.compose(s0, s1)
    assert weyl.compose(w, weyl.inverse(w)) == weyl.identity
    assert weyl.length(w) == w.length == 2
    assert weyl.apply(w, a2.simple_root(0)).coeffs == (0, 1)
    assert weyl.apply(w, a2.simple_root(1)).coeffs == (-1, -1)
    assert weyl.reflection(a2.simple_root(0)) == s0


def test_full_group_as_coset_family(a2: RootSystem) -> None:
    family = WeylGroup(a2).coset_reps(frozenset())
    assert len(family) == 6
    assert sorted(family.lengths) == [0, 1, 1, 2, 2, 3]
    assert list(family.lengths) == sorted(family.lengths)


def test_parabolic_quotient_matches_long_roots(g2: RootSystem, f4: RootSystem) -> None:
    for rs in (g2, f4):
        family = WeylGroup(rs).coset_reps(rs.i_tilde)
        assert len(family) == len(rs.long_roots)
        assert max(family.lengths) == rs.max_level
        assert len(family.by_length()[0]) == 1


def test_projective_space_quotient(a3: RootSystem) -> None:
    family = WeylGroup(a3).coset_reps({1, 2})
    assert family.lengths == (0, 1, 2, 3)


def test_coset_cap(e6: RootSystem) -> None:
    with pytest.raises(CapExceededError) as exc:
        WeylGroup(e6).coset_reps(frozenset(), cap=100)
    assert exc.value.cap == 100
    assert exc.value.partial_count == 100
    assert "--cap" in str(exc.value)


def test_reflection_lengths(g2: RootSystem) -> None:
    weyl = WeylGroup(g2)
    assert weyl.reflection(g2.highest_root).length == 5
    assert weyl.reflection(g2.simple_root(0)).length == 1


def test_x_alpha(b3: RootSystem) -> None:
    weyl = WeylGroup(b3)
    assert weyl.x_alpha(b3.highest_root) == weyl.identity
    for alpha in b3.long_roots:
        x = weyl.x_alpha(alpha)
        assert weyl.apply(x, b3.highest_root) == alpha
        assert x.length == b3.level(alpha)
    with pytest.raises(ShortRootError):
        weyl.x_alpha(b3.simple_root(2))


def test_simple_path(g2: RootSystem) -> None:
    weyl = WeylGroup(g2)
    path = weyl.simple_path(g2.highest_root, g2.simple_root(0))
    assert path == [0, 1]
    with pytest.raises(ValueError):
        weyl.simple_path(g2.simple_root(0), g2.highest_root)


INVARIANT_TYPES = [("A", 2), ("A", 3), ("B", 3), ("C", 3), ("D", 4), ("F", 4), ("G", 2)]
RANK_AT_MOST_3 = [("A", 2), ("A", 3), ("B", 3), ("C", 3), ("G", 2)]


def _whole_group(weyl: WeylGroup) -> list[WeylElement]:
    return list(weyl.coset_reps(frozenset()))


def _parabolic_subgroup(weyl: WeylGroup, index: Iterable[int]) -> list[WeylElement]:
    gens = [weyl.simple_reflection(i) for i in index]
    elements = {weyl.identity}
    frontier = [weyl.identity]
    while frontier:
        nxt: list[WeylElement] = []
        for w in frontier:
            for s in gens:
                v = weyl.compose(w, s)
                if v not in elements:
                    elements.add(v)
                    nxt.append(v)
        frontier = nxt
    return sorted(elements, key=lambda w: w.length)


def _positive_index(rs: RootSystem, root: Root) -> int:
    return rs.index(root if root.is_positive else -root)


@pytest.mark.parametrize(("family", "rank"), INVARIANT_TYPES)
def test_left_reflection_lengthens_exactly_when_preimage_is_positive(
    family: str, rank: int
) -> None:
    rs = build(family, rank)
    weyl = WeylGroup(rs)
    reflections = {k: weyl.reflection(rs.roots[k]) for k in rs.positive_roots}
    for w in _whole_group(weyl):
        w_inv = weyl.inverse(w)
        for k, s in reflections.items():
            longer = weyl.compose(s, w).length > w.length
            assert longer == weyl.apply(w_inv, rs.roots[k]).is_positive


@pytest.mark.parametrize(("family", "rank"), INVARIANT_TYPES)
def test_inversion_set_of_a_product(family: str, rank: int) -> None:
    rs = build(family, rank)
    weyl = WeylGroup(rs)
    group = _whole_group(weyl)
    if rs.rank <= 3:
        pairs = list(itertools.product(group, repeat=2))
    else:
        rng = random.Random(rs.name)
        pairs = [(rng.choice(group), rng.choice(group)) for _ in range(300)]
    for x, y in pairs:
        y_inv = weyl.inverse(y)
        moved = {_positive_index(rs, weyl.apply(y_inv, rs.roots[k])) for k in weyl.inversion_set(x)}
        expected = weyl.inversion_set(y) ^ moved
        assert weyl.inversion_set(weyl.compose(x, y)) == expected


@pytest.mark.parametrize(("family", "rank"), RANK_AT_MOST_3)
def test_coset_factorisation_adds_lengths(family: str, rank: int) -> None:
    rs = build(family, rank)
    weyl = WeylGroup(rs)
    order = len(_whole_group(weyl))
    for size in range(rs.rank + 1):
        for index in itertools.combinations(range(rs.rank), size):
            reps = weyl.coset_reps(index)
            subgroup = _parabolic_subgroup(weyl, index)
            products: set[WeylElement] = set()
            for x in reps:
                for w in subgroup:
                    xw = weyl.compose(x, w)
                    assert xw.length == x.length + w.length, (index, x.perm, w.perm)
                    products.add(xw)
            assert len(products) == len(reps) * len(subgroup) == order


@pytest.mark.parametrize(("family", "rank"), [("D", 4), ("F", 4)])
def test_long_root_quotient_factorises(family: str, rank: int) -> None:
    rs = build(family, rank)
    weyl = WeylGroup(rs)
    subgroup = _parabolic_subgroup(weyl, rs.i_tilde)
    for x in weyl.coset_reps(rs.i_tilde):
        for w in subgroup:
            assert weyl.compose(x, w).length == x.length + w.length


@pytest.mark.parametrize(("family", "rank"), INVARIANT_TYPES)
def test_x_alpha_of_opposite_root(family: str, rank: int) -> None:
    rs = build(family, rank)
    weyl = WeylGroup(rs)
    for alpha in rs.positive_long_roots:
        flipped = weyl.compose(weyl.reflection(alpha), weyl.x_alpha(alpha))
        assert weyl.x_alpha(-alpha) == flipped


@pytest.mark.parametrize(("family", "rank"), INVARIANT_TYPES)
def test_reflection_length_from_height(family: str, rank: int) -> None:
    # long roots use the height of the coroot, short roots the height of the root
    rs = build(family, rank)
    weyl = WeylGroup(rs)
    for k in rs.positive_roots:
        beta = rs.roots[k]
        height = rs.dual_height(beta) if beta.is_long else beta.height
        assert weyl.reflection(beta).length == 2 * height - 1, beta.label
