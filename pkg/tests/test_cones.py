from fractions import Fraction

from hypothesis import given, settings, strategies as st

from coho.cones import cone_membership, verify_membership

small = st.integers(min_value=-3, max_value=3)


@st.composite
def cone_case(draw):
    d = draw(st.integers(1, 4))
    k = draw(st.integers(0, 6))
    gens = [tuple(draw(small) for _ in range(d)) for _ in range(k)]
    x = tuple(Fraction(draw(small), draw(st.integers(1, 3))) for _ in range(d))
    return x, gens


@settings(max_examples=400, deadline=None)
@given(cone_case())
def test_decision_is_certified(case):
    # both answers carry an exactly checkable witness
    x, gens = case
    m = cone_membership(x, gens)
    assert verify_membership(m, x, gens)


@settings(max_examples=200, deadline=None)
@given(cone_case(), st.lists(st.integers(0, 4), min_size=6, max_size=6))
def test_nonnegative_combinations_are_inside(case, coeffs):
    _, gens = case
    if not gens:
        return
    d = len(gens[0])
    x = [sum(c * g[i] for c, g in zip(coeffs, gens)) for i in range(d)]
    assert cone_membership(x, gens).inside


def test_examples():
    gens = [(1, 0), (0, 1)]
    assert cone_membership((2, 3), gens).coefficients == (2, 3)
    out = cone_membership((-1, 1), gens)
    assert not out.inside and verify_membership(out, (-1, 1), gens)
    # dependent generators go through elimination
    gens = [(1, 0), (1, 1), (0, 1), (1, 2)]
    assert cone_membership((3, 5), gens).inside
    assert not cone_membership((1, -1), gens).inside
    # a line is a cone
    assert cone_membership((-4,), [(1,), (-1,)]).inside
    assert cone_membership((0, 0), []).inside
    assert not cone_membership((1, 0), []).inside
