from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from coho.invariants import weyl_orbit
from coho.rootsys import (CartanType, ParabolicSubset, RootSystemError, build_root_system, levi_components,
                          pairing, parabolic_split)

# |positive roots| from the classical closed forms
POSITIVE = {("A", n): n * (n + 1) // 2 for n in range(1, 9)}
POSITIVE.update({("B", n): n * n for n in range(2, 9)})
POSITIVE.update({("C", n): n * n for n in range(3, 9)})
POSITIVE.update({("D", n): n * (n - 1) for n in range(4, 9)})
POSITIVE.update({("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24, ("G", 2): 6})

SMALL = ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4", "F4"]


@pytest.mark.parametrize("key,count", sorted(POSITIVE.items()))
def test_positive_root_count(key, count):
    r = build_root_system(CartanType(*key))
    assert len(r.positive_roots) == count
    assert len(r.roots) == 2 * count


@pytest.mark.parametrize("label", SMALL)
def test_reflections_permute_roots(label):
    r = build_root_system(CartanType.parse(label))
    roots = set(r.roots)
    for i in range(r.rank):
        assert {r.reflect(i, a) for a in r.roots} == roots


@pytest.mark.parametrize("label", SMALL + ["E6"])
def test_coroot_pairing_is_two(label):
    r = build_root_system(CartanType.parse(label))
    for a in r.roots:
        w = r.to_weight(a)
        assert sum(c * x for c, x in zip(r.coroots[a], w)) == 2
        assert pairing(w, a, r) == 2


@pytest.mark.parametrize("label,order", [("A2", 6), ("B2", 8), ("G2", 12), ("A3", 24), ("B3", 48)])
def test_regular_orbit_is_weyl_group(label, order):
    r = build_root_system(CartanType.parse(label))
    assert len(weyl_orbit(r, [1] * r.rank)) == order


def test_bad_types_rejected():
    for s, n in (("E", 5), ("F", 3), ("B", 1), ("X", 2)):
        with pytest.raises(RootSystemError):
            CartanType(s, n)


def test_parabolic_split_a2():
    r = build_root_system(CartanType("A", 2))
    levi, nil = parabolic_split(r, ParabolicSubset([1]))
    assert sorted(nil) == [(0, 1), (1, 1)]
    assert sorted(levi) == [(-1, 0), (1, 0)]


def test_levi_components_d5():
    r = build_root_system(CartanType("D", 5))
    assert levi_components(r, ParabolicSubset([1, 2, 3, 4])) == [CartanType("A", 4)]
    assert levi_components(r, ParabolicSubset([2, 3, 4, 5])) == [CartanType("D", 4)]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_pairing_is_linear(label, data):
    r = build_root_system(CartanType.parse(label))
    coords = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=r.rank,
                      max_size=r.rank)
    u, v = data.draw(coords), data.draw(coords)
    a = data.draw(st.sampled_from(r.roots))
    s = [x + y for x, y in zip(u, v)]
    assert pairing(s, a, r) == pairing(u, a, r) + pairing(v, a, r)
    assert isinstance(pairing(u, a, r), Fraction)
