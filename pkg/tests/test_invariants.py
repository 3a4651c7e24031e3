from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from coho import linalg
from coho.cartans import fundamental_cartan
from coho.invariants import (INF, LimitError, PreconditionError, complex_fast_path, kostant_degree, r_g,
                             r_g_mu, r_min_over_parameter, r_prime)
from coho.realform import CompactFormError, compactness_grading
from coho.rootsys import CartanType, ParabolicSubset, build_root_system


def grid_r_g(f, bound=4):
    """min over nonzero grid points x of t of dim(n_x ∩ s), n_x = roots positive on x.

    Independent of the arrangement code: it only reads theta and the grading.
    Every grid point gives a proper theta-stable parabolic, so this is an
    upper bound that meets the true minimum once the grid hits a minimising ray.
    """
    state = fundamental_cartan(f)
    r = state.system
    eps = compactness_grading(f)
    basis = linalg.eigenspace(state.theta, 1)
    roots = list(r.roots)
    proj = [[r.inner(a, t) for t in basis] for a in roots]
    den = 1
    for row in proj:
        for v in row:
            den = den * v.denominator // np.gcd(den, v.denominator)
    P = np.array([[int(v * den) for v in row] for row in proj], dtype=np.int64)
    weight = []
    for a in roots:
        if state.act(a) == a:
            weight.append(2 if eps[a] else 0)  # imaginary: whole root space in s or in k
        else:
            weight.append(1)  # complex pair alpha, theta alpha share the two-dim space
    weight = np.array(weight)
    pts = np.array([c for c in product(range(-bound, bound + 1), repeat=len(basis)) if any(c)])
    cost = ((pts @ P.T) > 0).astype(np.int64) @ weight
    assert cost.min() % 2 == 0
    return int(cost.min()) // 2


SMALL_T = ["sl(2,R)", "sl(3,R)", "sl(4,R)", "su(2,1)", "su(2,2)", "su(3,1)", "so(3,2)", "so(4,1)",
           "so(4,2)", "so(4,3)", "sp(2,1)", "sp(6,R)", "G", "complex:A1", "complex:A2", "complex:B2",
           "complex:G2", "complex:A3"]


@pytest.mark.parametrize("name", SMALL_T)
def test_r_g_matches_grid_oracle(form, name):
    f = form(name)
    assert r_g(f, use_fast_path=False).value == grid_r_g(f)


@pytest.mark.parametrize("name", ["complex:A2", "complex:A3", "complex:A4", "complex:B3", "complex:C3",
                                  "complex:D4", "complex:G2", "complex:F4"])
def test_complex_fast_path_agrees_with_exhaustive(form, name):
    f = form(name)
    assert complex_fast_path(f).value == r_g(f, use_fast_path=False).value


def test_r_prime_witness(form):
    v = r_prime(form("sl(4,R)"))
    assert v.value == 3
    assert v.witness["dropped_simple_root"] in (1, 3)


def test_compact_forms(form):
    f = form("compact:G2")
    assert r_g(f).value == INF
    assert r_g(f).render() == "infinity"
    with pytest.raises(CompactFormError):
        r_prime(f)


def test_limit_error_and_deep(form):
    with pytest.raises(LimitError):
        r_g(form("E VIII"))


@pytest.mark.parametrize("name,mu,expected", [("sl(2,R)", [2], 1), ("su(2,1)", [2, 2], 2),
                                              ("su(2,1)", [1, 1], 0), ("sp(6,R)", [1, 1, 1], 0)])
def test_r_g_mu(form, name, mu, expected):
    assert r_g_mu(form(name), mu).value == expected


def test_r_g_mu_preconditions(form):
    with pytest.raises(PreconditionError) as e:
        r_g_mu(form("sl(2,R)"), [0])
    assert e.value.coroot == (1,)
    with pytest.raises(PreconditionError):
        r_g_mu(form("su(2,1)"), [Fraction(1, 2), 1])
    with pytest.raises(PreconditionError, match="theta"):
        r_g_mu(form("sl(3,R)"), [1, 2])


def test_r_min_over_parameter(form):
    v = r_min_over_parameter(form("sl(3,R)"), [1, 1])
    assert v.value == 0
    assert v.witness["pure_orbit_points"] == 2
    assert r_min_over_parameter(form("su(2,1)"), [1, 1]).value == 0


@pytest.mark.parametrize("lam,expected", [([2, -1], 1), ([1, 1], 2), ([-1, -1], 0)])
def test_kostant_degree_a2(lam, expected):
    r = build_root_system(CartanType("A", 2))
    assert kostant_degree(r, ParabolicSubset([1]), lam) == expected
