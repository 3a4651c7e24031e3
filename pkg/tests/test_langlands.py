import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from coho.langlands import decompose_int, integer_inverses, is_dominant, langlands_decompose
from coho.realform import build_restricted
from coho.rootsys import ParabolicSubset

SYSTEMS = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2", "BC2"]


def _rs(label):
    rank = int(label.lstrip("ABCDEFG"))
    return build_restricted(label, [1] * rank, 1 if label.startswith("BC") else 0)


def test_a2_mixed_sign():
    d = langlands_decompose(_rs("A2"), [1, -1])
    assert d.parabolic == ParabolicSubset([2])
    assert d.nu_plus == (Fraction(1, 2), 0)
    assert d.cone_part == (Fraction(-1, 2), 1)
    assert d.coefficients == (Fraction(1, 2),)


@pytest.mark.parametrize("label", SYSTEMS)
def test_boundary_cells(label):
    rs = _rs(label)
    n = rs.rank
    d = langlands_decompose(rs, [1] * n)
    assert d.describe(n) == "P0" and d.nu_plus == tuple([1] * n)
    # minus a positive combination of simple roots is in the cell of G
    a = rs.base.cartan_matrix
    nu = [-sum(a[i][k] * (k + 1) for k in range(n)) for i in range(n)]
    d = langlands_decompose(rs, nu)
    assert d.describe(n) == "G" and not any(d.nu_plus)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(SYSTEMS), st.data())
def test_idempotent_and_scaling(label, data):
    rs = _rs(label)
    nu = data.draw(st.lists(st.fractions(min_value=-6, max_value=6, max_denominator=5),
                            min_size=rs.rank, max_size=rs.rank))
    d = langlands_decompose(rs, nu)
    assert tuple(p - c for p, c in zip(d.nu_plus, d.cone_part)) == tuple(nu)
    again = langlands_decompose(rs, d.nu_plus)
    assert again.parabolic == d.parabolic and again.nu_plus == d.nu_plus
    t = data.draw(st.fractions(min_value=Fraction(1, 7), max_value=7))
    scaled = langlands_decompose(rs, [t * v for v in nu])
    assert scaled.parabolic == d.parabolic
    assert scaled.nu_plus == tuple(t * v for v in d.nu_plus)


@pytest.mark.parametrize("label", ["A2", "B3", "G2"])
def test_integer_twin_agrees(label):
    rs = _rs(label)
    a = rs.base.cartan_matrix
    inv = integer_inverses(a)
    rng = random.Random(7)
    for _ in range(300):
        nu = [rng.randint(-9, 9) for _ in range(rs.rank)]
        masks = decompose_int(a, inv, nu)
        assert len(masks) == 1
        d = langlands_decompose(rs, nu)
        assert masks[0] == sum(1 << i for i in d.parabolic.zero_based())


def test_wrong_length():
    with pytest.raises(ValueError):
        langlands_decompose(_rs("A2"), [1])


def test_is_dominant(form):
    f = form("sl(3,R)")
    assert is_dominant(f, ParabolicSubset([1]), [1])
    assert not is_dominant(f, ParabolicSubset([]), [1, -1])
    assert is_dominant(f, ParabolicSubset([]), [0, 2])
